"""Triangular-lattice geometry realized on the integer grid.

Sites live at their integer coordinates (x, y).  Each site has six
neighbors: (x+1,y), (x,y+1), (x-1,y+1), (x-1,y), (x,y-1), (x+1,y-1),
i.e. the square-grid steps plus the two diagonal steps along the
135-degree direction.  All angular quantities (sector membership,
winding angles) are computed in this embedding.

Boxes are sup-norm balls; an annulus A(n, m) is the set difference
B(m) \\ B(n), so it contains the outer boundary ring and excludes the
inner one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Site = tuple[int, int]

# Counterclockwise neighbor offsets, starting from (1, 0).
NEIGHBOR_OFFSETS: tuple[Site, ...] = (
    (1, 0),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (0, -1),
    (1, -1),
)

TWO_PI = 2.0 * math.pi


def neighbors(s: Site) -> list[Site]:
    """Six neighbors of a site in counterclockwise order from (x+1, y)."""
    x, y = s
    return [(x + dx, y + dy) for dx, dy in NEIGHBOR_OFFSETS]


def sup_norm(s: Site) -> int:
    return max(abs(s[0]), abs(s[1]))


def arg2pi(x: float, y: float) -> float:
    """Argument of (x, y) folded into [0, 2*pi). Undefined at the origin."""
    if x == 0 and y == 0:
        raise ValueError("argument undefined at origin")
    a = math.atan2(y, x)
    return a + TWO_PI if a < 0.0 else a


@dataclass(frozen=True)
class Box:
    """Sup-norm ball B(r) of radius r around the origin."""

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("box radius must be nonnegative")

    def contains(self, s: Site) -> bool:
        return sup_norm(s) <= self.r


def boundary_sites(b: Box) -> set[Site]:
    """Sites of B(r) adjacent to some site outside B(r).

    For r >= 1 this is the full sup-norm ring at radius r; B(0) is its
    own boundary.
    """
    r = b.r
    if r == 0:
        return {(0, 0)}
    ring: set[Site] = set()
    for t in range(-r, r + 1):
        ring.update([(r, t), (-r, t), (t, r), (t, -r)])
    return ring


def ring_sites_ccw(r: int) -> list[Site]:
    """The ring at sup-norm radius r in counterclockwise order from (r, 0).

    Consecutive sites are lattice-adjacent; the angular coordinate is
    strictly increasing along the walk, so this is also the ordering by
    arg2pi.
    """
    if r == 0:
        return [(0, 0)]
    out: list[Site] = []
    out.extend((r, t) for t in range(0, r))
    out.extend((r - s, r) for s in range(0, 2 * r))
    out.extend((-r, r - t) for t in range(0, 2 * r))
    out.extend((-r + s, -r) for s in range(0, 2 * r))
    out.extend((r, -r + t) for t in range(0, r))
    return out


@dataclass(frozen=True)
class Annulus:
    """A(inner, outer) = B(outer) minus B(inner); requires 0 < inner < outer."""

    inner: int
    outer: int

    def __post_init__(self):
        if not 0 <= self.inner < self.outer:
            raise ValueError("annulus requires 0 <= inner < outer")

    def contains(self, s: Site) -> bool:
        return self.inner < sup_norm(s) <= self.outer


def dyadic_annulus(p: int) -> Annulus:
    """The annulus between radii 2**p and 2**(p+1)."""
    return Annulus(2**p, 2 ** (p + 1))


@dataclass(frozen=True)
class Sector:
    """Open angular sector lo < arg(z) < hi, read cyclically.

    ``wraps`` marks sectors whose arc crosses the branch cut at angle 0;
    membership is then arg > lo or arg < hi.  Angles are normalized to
    [0, 2*pi).  The origin is never a member.
    """

    lo: float
    hi: float
    wraps: bool = False

    @staticmethod
    def from_angles(lo: float, hi: float) -> "Sector":
        lo_n = lo % TWO_PI
        hi_n = hi % TWO_PI
        return Sector(lo_n, hi_n, wraps=lo_n >= hi_n)

    def contains_angle(self, a: float) -> bool:
        a = a % TWO_PI
        if self.wraps:
            return a > self.lo or a < self.hi
        return self.lo < a < self.hi


def sector_contains(sec: Sector, p: tuple[float, float]) -> bool:
    """Strict membership of a planar point; errors at the origin."""
    return sec.contains_angle(arg2pi(p[0], p[1]))


def octant_sector(i: int) -> Sector:
    """The i-th of the eight width-pi/4 sectors centered at (i-1)*pi/4.

    Indices are cyclic mod 8; sector i spans (-3/8 + i/4, -1/8 + i/4) in
    units of pi.
    """
    lo = -3.0 * math.pi / 8.0 + i * math.pi / 4.0
    return Sector.from_angles(lo, lo + math.pi / 4.0)


def corridor_sector(i: int) -> Sector:
    """Union of octant sectors i-1, i, i+1 (a width-3*pi/4 corridor)."""
    lo = -3.0 * math.pi / 8.0 + (i - 1) * math.pi / 4.0
    return Sector.from_angles(lo, lo + 3.0 * math.pi / 4.0)


def face_path_sector(j: int) -> Sector:
    """Allowed sector for the j-th face path (j = 1..4), centered on the
    axis direction (j-1)*pi/2 with a pi/8 margin past the flanking
    diagonals."""
    lo = (j - 2) * math.pi / 2.0 - math.pi / 8.0
    hi = j * math.pi / 2.0 + math.pi / 8.0
    return Sector.from_angles(lo, hi)


# --- the narrow sector "rectangle" used for crossing counts ---

RECT_HALF_ANGLE = math.pi / 10.0


def _dist_to_ray(px: float, py: float, phi: float) -> float:
    ux, uy = math.cos(phi), math.sin(phi)
    if px * ux + py * uy <= 0.0:
        return math.hypot(px, py)
    return abs(ux * py - uy * px)


def rect_region(m: int, n: int) -> tuple[list[Site], list[bool], list[bool]]:
    """Sites of the topological rectangle between the rays at +-pi/10
    within the annulus A(m, n), with crossing-endpoint flags.

    Returns (sites, near_lower_ray, near_upper_ray); a path crosses the
    rectangle when it runs from a site adjacent to the lower ray
    (Euclidean distance < sqrt(2)) to one adjacent to the upper ray.
    """
    if not 0 < m < n:
        raise ValueError("rectangle requires 0 < m < n")
    sites: list[Site] = []
    near_lo: list[bool] = []
    near_hi: list[bool] = []
    sqrt2 = math.sqrt(2.0)
    tan_half = math.tan(RECT_HALF_ANGLE)
    for x in range(1, n + 1):
        y_span = int(math.ceil(tan_half * x)) + 1
        for y in range(-y_span, y_span + 1):
            if not m < max(abs(x), abs(y)) <= n:
                continue
            if abs(math.atan2(y, x)) >= RECT_HALF_ANGLE:
                continue
            sites.append((x, y))
            near_lo.append(_dist_to_ray(x, y, -RECT_HALF_ANGLE) < sqrt2)
            near_hi.append(_dist_to_ray(x, y, RECT_HALF_ANGLE) < sqrt2)
    return sites, near_lo, near_hi


def reflect_site(s: Site) -> Site:
    """Reflection across the main diagonal, (x, y) -> (y, x).

    This is a Euclidean isometry that preserves the six-neighbor
    adjacency and exactly negates winding angles.
    """
    return (s[1], s[0])
