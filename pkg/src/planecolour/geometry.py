"""Planar primitives: points, distance intervals, rational rotations."""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_TAU = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, f: float) -> Point:
        return Point(self.x * f, self.y * f)

    @classmethod
    def polar(cls, radius: float, angle: float, origin: Point | None = None) -> Point:
        p = cls(radius * math.cos(angle), radius * math.sin(angle))
        return p if origin is None else origin + p


ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class DistanceInterval:
    """Closed interval ``[lo, hi]`` of admissible edge lengths."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0 < self.lo <= self.hi):
            raise ValueError(f"need 0 < lo <= hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def unit(cls) -> DistanceInterval:
        return cls(1.0, 1.0)

    @classmethod
    def epsilon(cls, eps: float) -> DistanceInterval:
        return cls(1.0, 1.0 + eps)


@dataclass(frozen=True)
class Tolerance:
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        if not (0 < self.tau <= 1e-6):
            raise ValueError(f"tolerance must satisfy 0 < tau <= 1e-6, got {self.tau}")


@dataclass(frozen=True)
class RationalAngle:
    """The angle ``2*pi*m/k`` with ``gcd(m, k) = 1`` and ``m < k``."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError("m and k must be positive")
        if self.m >= self.k:
            raise ValueError(f"need m < k, got m={self.m}, k={self.k}")
        if math.gcd(self.m, self.k) != 1:
            raise ValueError(f"gcd({self.m}, {self.k}) != 1")

    @property
    def value(self) -> float:
        return 2.0 * math.pi * self.m / self.k

    def power(self, j: int) -> float:
        """Angle of the j-fold rotation, reduced mod 2*pi before the float multiply."""
        return 2.0 * math.pi * ((j * self.m) % self.k) / self.k


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def in_interval(p: Point, q: Point, iv: DistanceInterval, tol: Tolerance = Tolerance()) -> bool:
    d = distance(p, q)
    return iv.lo - tol.tau <= d <= iv.hi + tol.tau


def rotate_about(center: Point, angle: RationalAngle, power: int, p: Point) -> Point:
    a = angle.power(power)
    c, s = math.cos(a), math.sin(a)
    dx, dy = p.x - center.x, p.y - center.y
    return Point(center.x + c * dx - s * dy, center.y + s * dx + c * dy)


def signed_distance_to_line(p: Point, through: Point, direction: float) -> float:
    """Signed distance from ``p`` to the line through ``through`` with the given heading."""
    ux, uy = math.cos(direction), math.sin(direction)
    return ux * (p.y - through.y) - uy * (p.x - through.x)
