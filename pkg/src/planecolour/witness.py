"""Finite geometric gadgets: the Moser spindle, odd wheels, the boundary gadget."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from .chromatic import AbstractGraph
from .geometry import (
    ORIGIN,
    DistanceInterval,
    Point,
    RationalAngle,
    Tolerance,
    distance,
    in_interval,
    rotate_about,
    signed_distance_to_line,
)

Mode = Literal["theorem1", "theorem2"]
# Largest epsilon for which the seven-colour tiling argument is meant to apply.
EPSILON_TILING_LIMIT = 3 * math.sqrt(2) / 4 - 1
MAX_ORDER = 1_000_001


class WitnessError(ValueError):
    pass


@dataclass(eq=True)
class FiniteGeometricGraph:
    """Points plus edges. ``None`` entries in ``points`` are pseudo-vertices.

    Equality compares points, edges and precolours; the edge rule and the
    ``meta`` dictionary are construction metadata.
    """

    points: list[Point | None]
    edges: frozenset[tuple[int, int]]
    precolour: dict[int, int] = field(default_factory=dict)
    edge_rule: DistanceInterval | None = field(default=None, compare=False)
    tol: Tolerance = field(default_factory=Tolerance, compare=False)
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < len(self.points) and 0 <= b < len(self.points)):
                raise ValueError(f"edge ({a}, {b}) references a missing vertex")
            norm.add((min(a, b), max(a, b)))
        self.edges = frozenset(norm)

    @property
    def n(self) -> int:
        return len(self.points)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def geometric_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.sorted_edges()
                if self.points[a] is not None and self.points[b] is not None]

    def edge_length(self, a: int, b: int) -> float:
        return distance(self.points[a], self.points[b])

    def bad_edges(self) -> list[tuple[int, int, float]]:
        """Geometric edges whose length falls outside the inflated edge rule."""
        if self.edge_rule is None:
            return []
        return [(a, b, self.edge_length(a, b)) for a, b in self.geometric_edges()
                if not in_interval(self.points[a], self.points[b], self.edge_rule, self.tol)]

    def induced(self, keep: list[int]) -> FiniteGeometricGraph:
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset((index[a], index[b]) for a, b in self.edges if a in index and b in index)
        pre = {index[v]: c for v, c in self.precolour.items() if v in index}
        return FiniteGeometricGraph([self.points[v] for v in keep], edges, pre,
                                    self.edge_rule, self.tol)

    def to_abstract(self) -> AbstractGraph:
        return AbstractGraph.from_edges(self.n, self.sorted_edges(), self.precolour)


def moser_spindle(tol: Tolerance = Tolerance()) -> FiniteGeometricGraph:
    """Two unit rhombi sharing the apex at the origin, turned until their far
    tips (at distance sqrt(3)) are one unit apart."""
    half = math.asin(1 / (2 * math.sqrt(3)))
    pts = [ORIGIN]
    edges = []
    for sign in (1, -1):
        phi = sign * half
        a = Point.polar(1.0, phi + math.pi / 6)
        b = Point.polar(1.0, phi - math.pi / 6)
        tip = Point.polar(math.sqrt(3), phi)
        base = len(pts)
        pts += [a, b, tip]
        edges += [(0, base), (0, base + 1), (base, base + 1), (base, base + 2), (base + 1, base + 2)]
    edges.append((3, 6))
    return FiniteGeometricGraph(pts, frozenset(edges), edge_rule=DistanceInterval.unit(), tol=tol,
                                meta={"kind": "spindle"})


@dataclass(frozen=True)
class RotationSolution:
    k: int
    m: int
    delta: float
    theta: float
    mode: str = "theorem1"
    epsilon: float = 0.0

    @property
    def angle(self) -> RationalAngle:
        return RationalAngle(self.m, self.k)


def admissible_sine_interval(mode: Mode, epsilon: float) -> tuple[float, float]:
    """Open interval for ``sin(pi*m/k)`` that puts ``delta`` strictly inside its range.

    theorem1: delta = (2+eps)*s - 1 must lie in (eps/2, eps).
    theorem2: delta = 1/(2s) must lie in (sqrt(1 - eps^2/4), 1).
    """
    if mode == "theorem1":
        if not epsilon > 0:
            raise ValueError(f"theorem1 needs epsilon > 0, got {epsilon}")
        return (1 + epsilon / 2) / (2 + epsilon), (1 + epsilon) / (2 + epsilon)
    if mode == "theorem2":
        if not 0 < epsilon < 1:
            raise ValueError(f"theorem2 needs 0 < epsilon < 1, got {epsilon}")
        return 0.5, 1 / (2 * math.sqrt(1 - epsilon**2 / 4))
    raise ValueError(f"unknown mode {mode!r}")


def _in_open(s: float, lo: float, hi: float) -> bool:
    return lo < s < hi


def solve_odd_rotation(mode: Mode, epsilon: float, max_k: int = MAX_ORDER) -> RotationSolution:
    """Least odd ``k`` (then least ``m``) whose rotation by ``2*pi*m/k`` fits the gadget."""
    lo, hi = admissible_sine_interval(mode, epsilon)
    for k in range(3, max_k + 1, 2):
        # sin is increasing on (0, pi/2], so only m with pi*m/k in (asin lo, asin hi) qualify.
        m_lo = max(1, math.floor(k * math.asin(lo) / math.pi))
        m_hi = min((k - 1) // 2, math.ceil(k * math.asin(min(hi, 1.0)) / math.pi))
        for m in range(m_lo, m_hi + 1):
            if math.gcd(m, k) != 1:
                continue
            s = math.sin(math.pi * m / k)
            if not _in_open(s, lo, hi):
                continue
            delta = (2 + epsilon) * s - 1 if mode == "theorem1" else 1 / (2 * s)
            return RotationSolution(k, m, delta, 2 * math.pi * m / k, mode, epsilon)
    raise ValueError(f"no odd rotation order up to {max_k} for {mode}, epsilon={epsilon}")


def build_wheel(
    center: Point,
    spoke: float,
    sol: RotationSolution,
    base_angle: float = 0.0,
    edge_rule: DistanceInterval | None = None,
    tol: Tolerance = Tolerance(),
    check: bool = True,
) -> FiniteGeometricGraph:
    """Centre (vertex 0) plus the rim orbit ``phi^j(Q)`` (vertices 1..k).

    With ``check`` and an ``edge_rule``, both the spoke and the rim chord must
    be admissible edge lengths.
    """
    chord = 2 * spoke * math.sin(math.pi * sol.m / sol.k)
    if check and edge_rule is not None:
        for what, length in (("spoke", spoke), ("rim chord", chord)):
            if not edge_rule.lo - tol.tau <= length <= edge_rule.hi + tol.tau:
                raise WitnessError(
                    f"{what} length {length!r} outside [{edge_rule.lo}, {edge_rule.hi}]")
    q = Point.polar(spoke, base_angle, center)
    angle = sol.angle
    rim = [rotate_about(center, angle, j, q) for j in range(sol.k)]
    k = sol.k
    edges = [(0, 1 + j) for j in range(k)] + [(1 + j, 1 + (j + 1) % k) for j in range(k)]
    return FiniteGeometricGraph([center] + rim, frozenset(edges), edge_rule=edge_rule, tol=tol,
                                meta={"kind": "wheel", "rotation": sol, "spoke": spoke,
                                      "chord": chord, "rim": list(range(1, k + 1))})


def rim_of(wheel: FiniteGeometricGraph) -> FiniteGeometricGraph:
    return wheel.induced(wheel.meta["rim"])


def theorem1_wheel(epsilon: float, center: Point = ORIGIN, base_angle: float = 0.0,
                   tol: Tolerance = Tolerance()) -> FiniteGeometricGraph:
    sol = solve_odd_rotation("theorem1", epsilon)
    return build_wheel(center, 1 + epsilon / 2, sol, base_angle,
                       DistanceInterval.epsilon(epsilon), tol)


@dataclass(frozen=True)
class BoundarySpec:
    """Point ``p`` on a line heading ``line_angle``; the left side (positive
    signed distance) is solidly ``colour_a`` near ``p`` and the right side
    ``colour_b``, within the ball of radius ``epsilon``."""

    p: Point = ORIGIN
    line_angle: float = 0.0
    colour_a: int = 0
    colour_b: int = 1
    epsilon: float = 0.5

    def __post_init__(self):
        if self.colour_a == self.colour_b:
            raise ValueError("the two region colours must differ")
        if not 0 < self.epsilon < 1:
            raise ValueError(f"need 0 < epsilon < 1, got {self.epsilon}")


def build_boundary_witness(spec: BoundarySpec, tol: Tolerance = Tolerance()) -> FiniteGeometricGraph:
    """Odd rim at radius delta around ``p`` whose every vertex is one unit from
    an ``a``-coloured and a ``b``-coloured point near ``p``.

    Vertex 0 is ``p`` (no edges: spokes have length delta < 1), vertices
    1..k the rim, k+1 and k+2 the pseudo-vertices A and B precoloured with
    ``colour_a`` and ``colour_b``. For each apex the two base endpoints of its
    isosceles unit triangle are recorded in ``meta["base_endpoints"]`` as
    ``(a_side, b_side)``.
    """
    sol = solve_odd_rotation("theorem2", spec.epsilon)
    k, m, delta = sol.k, sol.m, sol.delta
    base_angle = spec.line_angle + math.pi / 2 + math.pi * m / (k * 1000)
    wheel = build_wheel(spec.p, delta, sol, base_angle, check=False, tol=tol)
    unit = DistanceInterval.unit()
    half_base = math.sqrt(1 - delta * delta)
    a_ix, b_ix = k + 1, k + 2
    edges = set(e for e in wheel.edges if 0 not in e)
    endpoints = []
    for j in range(1, k + 1):
        apex = wheel.points[j]
        heading = math.atan2(apex.y - spec.p.y, apex.x - spec.p.x) + math.pi / 2
        e1 = Point.polar(half_base, heading, spec.p)
        e2 = Point.polar(-half_base, heading, spec.p)
        s1 = signed_distance_to_line(e1, spec.p, spec.line_angle)
        s2 = signed_distance_to_line(e2, spec.p, spec.line_angle)
        if not s1 * s2 < 0:
            raise WitnessError(f"rim vertex {j} lies on the perpendicular to the boundary line")
        a_pt, b_pt = (e1, e2) if s1 > 0 else (e2, e1)
        for e in (a_pt, b_pt):
            if not in_interval(apex, e, unit, tol):
                raise WitnessError(f"triangle side {distance(apex, e)!r} is not a unit length")
            if distance(e, spec.p) > spec.epsilon + tol.tau:
                raise WitnessError("triangle base leaves the neighbourhood ball")
        endpoints.append((a_pt, b_pt))
        edges.add((j, a_ix))
        edges.add((j, b_ix))
    graph = FiniteGeometricGraph(
        wheel.points + [None, None], frozenset(edges),
        {a_ix: spec.colour_a, b_ix: spec.colour_b}, unit, tol,
        meta={"kind": "boundary", "rotation": sol, "rim": list(range(1, k + 1)),
              "base_endpoints": endpoints, "spec": spec, "pseudo": (a_ix, b_ix)})
    bad = graph.bad_edges()
    if bad:
        raise WitnessError(f"rim chord of length {bad[0][2]!r} is not a unit length")
    return graph
