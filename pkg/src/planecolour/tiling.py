"""Seven-colour square tiling of the plane and tools to test candidate colourings.

Tiles are half-open squares ``[a, a+side) x [b, b+side)``. Row ``r`` occupies
``r*side <= y < (r+1)*side``; within a row the tile index is

    col = floor((x + shift_sign * r * row_shift) / side)

and the tile colour is ``col mod colours``. With ``shift_sign = +1`` each row
is the row below it moved ``row_shift`` to the left.

The default spec uses side ``sqrt(2)/2`` (tile diagonal 1) and a row shift of
two and a half tiles, which reproduces the classical labelling::

    row 3:   2 3 4 5 6 7      (offset half a tile)
    row 2:  6 7 1 2 3 4 5
    row 1:   4 5 6 7 1 2      (offset half a tile)
    row 0:  1 2 3 4 5 6 7

Colour ids are zero-based internally; the CLI prints them 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import DistanceInterval, Point, Tolerance, distance, in_interval
from .oracle import ColouringOracle

SQRT2 = math.sqrt(2.0)
TILE_SIDE = SQRT2 / 2
# Bound the same-colour gap was claimed to reach; no row shift of these squares achieves it.
CLAIMED_SEPARATION = 3 * SQRT2 / 4


@dataclass(frozen=True)
class SquareTilingSpec:
    side: float = TILE_SIDE
    row_shift: float = 5 * SQRT2 / 4
    colours: int = 7
    shift_sign: int = 1

    def __post_init__(self):
        if self.side <= 0:
            raise ValueError("tile side must be positive")
        if self.colours < 1:
            raise ValueError("need at least one colour")
        if self.shift_sign not in (1, -1):
            raise ValueError("shift_sign must be +1 or -1")
        if self.side * SQRT2 > 1 + 1e-12:
            raise ValueError(f"tile diagonal {self.side * SQRT2} exceeds 1")

    @property
    def diagonal(self) -> float:
        return self.side * SQRT2

    def tile_of(self, p: Point) -> tuple[int, int]:
        row = math.floor(p.y / self.side)
        col = math.floor((p.x + self.shift_sign * row * self.row_shift) / self.side)
        return row, col

    def tile_box(self, row: int, col: int) -> tuple[float, float, float, float]:
        """``(x0, x1, y0, y1)`` of a tile; left and bottom edges belong to it."""
        x0 = col * self.side - self.shift_sign * row * self.row_shift
        y0 = row * self.side
        return x0, x0 + self.side, y0, y0 + self.side


CANONICAL = SquareTilingSpec()
# The reading "row shift 3*sqrt(2)/4 to the left" taken literally in tile colours.
LITERAL_SHIFT = SquareTilingSpec(row_shift=3 * SQRT2 / 4, shift_sign=-1)


def colour_at(spec: SquareTilingSpec, p: Point) -> int:
    row = math.floor(p.y / spec.side)
    col = math.floor((p.x + spec.shift_sign * row * spec.row_shift) / spec.side)
    return ((col % spec.colours) + spec.colours) % spec.colours


class TilingOracle(ColouringOracle):
    def __init__(self, spec: SquareTilingSpec = CANONICAL):
        self.spec = spec
        self.palette = spec.colours
        self.name = "tiling7" if spec == CANONICAL else "tiling"

    def colour(self, p: Point) -> int:
        return colour_at(self.spec, p)

    def colour_many(self, xs, ys) -> np.ndarray:
        s = self.spec
        return kernels.tile_colours(xs, ys, s.side, s.row_shift, s.colours, s.shift_sign)


def _gap(delta: float, side: float) -> float:
    return max(0.0, abs(delta) - side)


def min_same_colour_separation(spec: SquareTilingSpec = CANONICAL, row_window: int = 3) -> float:
    """Infimum distance between two distinct tiles of the same colour.

    Rows ``0..row_window`` apart are examined; for each row offset only the
    three same-colour column offsets nearest to the geometric shift can be
    closest. The infimum is never attained: every gap between two tiles
    faces an open edge.
    """
    s, n = spec.side, spec.colours
    best = math.inf
    for dr in range(row_window + 1):
        shift = spec.shift_sign * dr * spec.row_shift
        t0 = round(shift / (s * n))
        for t in (t0 - 1, t0, t0 + 1):
            dc = t * n
            if dr == 0 and dc == 0:
                continue
            dx = dc * s - shift
            gy = dr * s - s if dr else 0.0
            best = min(best, math.hypot(_gap(dx, s), max(0.0, gy)))
    return best


def brute_force_separation(spec: SquareTilingSpec = CANONICAL, rows: int = 3) -> float:
    """Enumerate every tile in the window around tile (0, 0), colour each by
    sampling :func:`colour_at` at its centre, and take the least box distance
    to a same-coloured one."""
    s = spec.side
    ref = Point(s / 2, s / 2)
    ref_colour = colour_at(spec, ref)
    ax0, ax1, ay0, ay1 = spec.tile_box(*spec.tile_of(ref))
    span = spec.colours + 2
    best = math.inf
    for r in range(-rows, rows + 1):
        centre_col = math.floor(spec.shift_sign * r * spec.row_shift / s)
        for c in range(centre_col - span, centre_col + span + 1):
            if (r, c) == (0, 0):
                continue
            bx0, bx1, by0, by1 = spec.tile_box(r, c)
            centre = Point((bx0 + bx1) / 2, (by0 + by1) / 2)
            if colour_at(spec, centre) != ref_colour:
                continue
            gx = max(0.0, bx0 - ax1, ax0 - bx1)
            gy = max(0.0, by0 - ay1, ay0 - by1)
            best = min(best, math.hypot(gx, gy))
    return best


def is_proper_for(spec: SquareTilingSpec, iv: DistanceInterval, tol: Tolerance = Tolerance()) -> bool:
    """Whether no two same-coloured points have distance in ``iv``.

    Same-tile distances lie in ``[0, diagonal)`` and same-colour distances
    across tiles in ``(separation, inf)``; both ends are open, so touching
    ``iv`` at an end is allowed (up to rounding in the separation).
    """
    return spec.diagonal <= iv.lo + tol.tau and min_same_colour_separation(spec) >= iv.hi - tol.tau


@dataclass(frozen=True)
class Region:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError("empty region")


DEFAULT_REGION = Region(-5.0, 5.0, -5.0, 5.0)


@dataclass(frozen=True)
class ViolatingPair:
    p: Point
    q: Point
    colour: int
    dist: float


_CHUNK = 1 << 16


def violation_search(
    oracle: ColouringOracle,
    iv: DistanceInterval,
    region: Region = DEFAULT_REGION,
    samples: int = 100_000,
    seed: int = 0,
    tol: Tolerance = Tolerance(),
) -> ViolatingPair | None:
    """Randomised search for two same-coloured points at distance in ``iv``.

    Each probe draws a base point uniformly in ``region``, a uniform direction
    and a radius uniform in ``[iv.lo, iv.hi]``. The stream comes from numpy's
    PCG64 seeded with ``seed`` and is consumed in fixed-size chunks, so results
    are reproducible. Returns the first violating probe, or None.
    ``OracleError`` from the oracle propagates unchanged.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    done = 0
    while done < samples:
        n = min(_CHUNK, samples - done)
        px = rng.uniform(region.xmin, region.xmax, n)
        py = rng.uniform(region.ymin, region.ymax, n)
        theta = rng.uniform(0.0, 2 * math.pi, n)
        radius = rng.uniform(iv.lo, iv.hi, n)
        qx = px + radius * np.cos(theta)
        qy = py + radius * np.sin(theta)
        cp = oracle.colour_many(px, py)
        cq = oracle.colour_many(qx, qy)
        start = 0
        while True:
            i = kernels.first_match(cp[start:], cq[start:])
            if i < 0:
                break
            i += start
            p, q = Point(float(px[i]), float(py[i])), Point(float(qx[i]), float(qy[i]))
            if in_interval(p, q, iv, tol):
                return ViolatingPair(p, q, int(cp[i]), distance(p, q))
            start = i + 1
        done += n
    return None
