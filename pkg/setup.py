"""Build script: compiles the C++ kernel extension when Cython is available.

The package is fully functional without the extension (a pure-Python kernel
module with identical semantics is selected at import time), so a failed or
skipped extension build degrades performance only.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "windinglab._kernels",
                ["src/windinglab/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not found; installing with the pure-Python kernel only.")

setup(ext_modules=ext_modules)
