"""Seeded, lazily evaluated site colorings at the critical density 1/2.

A coloring never stores the random field: the color of a site is a pure
function of (stream id, x, y) through a counter-based 64-bit mixer, so
sites can be queried in any data-dependent order with O(1) memory.
Finite override maps shadow the random field exactly at their keys,
which is how hand-built test configurations are expressed.

Streams for sharded Monte Carlo are derived from a master seed by the
documented mixing in :func:`derive_stream`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .lattice import Site

WHITE = 0
BLACK = 1

MODE_HASH = 0
MODE_ALL_BLACK = 1
MODE_ALL_WHITE = 2

_MASK64 = (1 << 64) - 1
_STREAM_SALT = 0xC2B2AE3D27D4EB4F


def opposite(color: int) -> int:
    return color ^ 1


def mix64(z: int) -> int:
    """SplitMix64 finalizer (Stafford mix13): a 64-bit bijective mixer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_stream_id(master_seed: int, shard: int, replicate: int) -> int:
    """Collision-resistant mixing of (master_seed, shard, replicate).

    stream_id = mix64( mix64(master ^ A) ^ (shard * B) ^ mix64(replicate ^ C) )
    with the fixed 64-bit constants below.  Distinct (shard, replicate)
    pairs give distinct stream ids on any range that matters in practice.
    """
    a = mix64((master_seed & _MASK64) ^ 0xA0761D6478BD642F)
    b = (shard & _MASK64) * 0xE7037ED1A0B428DB & _MASK64
    c = mix64((replicate & _MASK64) ^ 0x8EBC6AF09C88C6E3)
    return mix64(a ^ b ^ c)


def _site_key(x: int, y: int) -> int:
    return ((x & 0xFFFFFFFF) << 32) | (y & 0xFFFFFFFF)


@dataclass(frozen=True)
class Coloring:
    """An immutable view of a black/white field over all sites.

    ``mode`` selects the base field (seeded i.i.d. fair coloring, or a
    constant field for constructions); ``overrides`` shadows it on a
    finite set of sites; ``swap_xy`` marks the diagonal-reflection view.
    """

    master_seed: int = 0
    stream_id: int = 0
    mode: int = MODE_HASH
    overrides: Mapping[Site, int] = field(default_factory=dict)
    swap_xy: bool = False
    shard: int = 0
    replicate: int = 0

    def __post_init__(self):
        object.__setattr__(self, "overrides", MappingProxyType(dict(self.overrides)))

    def desc(self) -> tuple:
        """Kernel descriptor: (mode, mixed stream, swap flag, overrides)."""
        return (
            self.mode,
            mix64(self.stream_id ^ _STREAM_SALT),
            1 if self.swap_xy else 0,
            dict(self.overrides),
        )

    def with_overrides(self, overrides: Mapping[Site, int]) -> "Coloring":
        merged = dict(self.overrides)
        merged.update(overrides)
        return Coloring(
            self.master_seed,
            self.stream_id,
            self.mode,
            merged,
            self.swap_xy,
            self.shard,
            self.replicate,
        )


def derive_stream(master_seed: int, shard: int, replicate: int) -> Coloring:
    return Coloring(
        master_seed=master_seed,
        stream_id=derive_stream_id(master_seed, shard, replicate),
        shard=shard,
        replicate=replicate,
    )


def all_black() -> Coloring:
    return Coloring(mode=MODE_ALL_BLACK)


def all_white() -> Coloring:
    return Coloring(mode=MODE_ALL_WHITE)


def color_of(c: Coloring, s: Site, stats: dict | None = None) -> int:
    """Color of a site; pure in (stream, site) apart from overrides.

    ``stats`` is an optional dict whose "queries" entry is incremented,
    used to assert laziness in tests.
    """
    if stats is not None:
        stats["queries"] = stats.get("queries", 0) + 1
    x, y = s
    if c.swap_xy:
        x, y = y, x
    ov = c.overrides.get((x, y))
    if ov is not None:
        return ov
    if c.mode == MODE_ALL_BLACK:
        return BLACK
    if c.mode == MODE_ALL_WHITE:
        return WHITE
    h = mix64(_site_key(x, y) ^ mix64(c.stream_id ^ _STREAM_SALT))
    return (h >> 63) & 1


def reflect(c: Coloring) -> Coloring:
    """The view whose color at (x, y) is c's color at (y, x).

    The map (x, y) -> (y, x) is an adjacency-preserving isometry of the
    lattice and negates winding angles exactly; applying the view twice
    gives back the original coloring.
    """
    return Coloring(
        c.master_seed,
        c.stream_id,
        c.mode,
        dict(c.overrides),
        not c.swap_xy,
        c.shard,
        c.replicate,
    )


def parse_seed(text: str) -> int:
    """Seeds are accepted in decimal or hex ("0x..." ) forms."""
    t = text.strip().lower()
    return int(t, 16) if t.startswith("0x") else int(t, 10)
