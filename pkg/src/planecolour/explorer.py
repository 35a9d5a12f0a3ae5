"""Run the lower-bound constructions against concrete colouring oracles.

``find_trichromatic_ball`` walks outward through monochromatic lattice
components until the minimal separating cycle of the current component shows
two colours; the two differently coloured cycle neighbours and a component
vertex adjacent to both give three colours inside a ball of radius eps/2.
``six_colour_certificate`` then centres an odd wheel on that ball, and
``five_colour_certificate`` checks the finite core of the straight-boundary
bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chromatic import optimal_colouring
from .geometry import DistanceInterval, Point, Tolerance, distance, in_interval, signed_distance_to_line
from .lattice import (
    LatticeCoord,
    LatticeCycle,
    LatticeSpec,
    common_neighbours,
    embed,
    minimize_separating_cycle,
    monochromatic_component,
)
from .oracle import ColouringOracle
from .tiling import ViolatingPair
from .witness import (
    EPSILON_TILING_LIMIT,
    BoundarySpec,
    FiniteGeometricGraph,
    build_boundary_witness,
    build_wheel,
    solve_odd_rotation,
)

DEFAULT_STEP_CAP = 10_000
DEFAULT_COMPONENT_CAP = 1_000_000


class StepCapExceeded(RuntimeError):
    pass


class OracleNotProper(RuntimeError):
    def __init__(self, pair: ViolatingPair, where: str):
        self.pair = pair
        self.where = where
        super().__init__(
            f"oracle not proper: {where} ({pair.p.x!r}, {pair.p.y!r}) and "
            f"({pair.q.x!r}, {pair.q.y!r}) both colour {pair.colour} at distance {pair.dist!r}")


class CertificateInvalid(AssertionError):
    pass


def _check_epsilon(epsilon: float) -> None:
    if not 0 < epsilon < EPSILON_TILING_LIMIT:
        raise ValueError(f"need 0 < epsilon < {EPSILON_TILING_LIMIT:.6f}, got {epsilon}")


@dataclass(frozen=True)
class TriBallCertificate:
    p: Point
    witnesses: tuple[Point, Point, Point]
    coords: tuple[LatticeCoord, LatticeCoord, LatticeCoord]
    colours: tuple[int, int, int]
    gamma: float
    epsilon: float
    rounds: int = 1
    component_sizes: tuple[int, ...] = ()


def cycle_colours(oracle: ColouringOracle, spec: LatticeSpec, cycle: LatticeCycle) -> np.ndarray:
    pts = [embed(spec, c) for c in cycle]
    return oracle.colour_many(np.array([p.x for p in pts]), np.array([p.y for p in pts]))


def find_trichromatic_ball(
    oracle: ColouringOracle,
    epsilon: float,
    start: tuple[int, int] = (0, 0),
    step_cap: int = DEFAULT_STEP_CAP,
    component_cap: int = DEFAULT_COMPONENT_CAP,
) -> TriBallCertificate:
    _check_epsilon(epsilon)
    if step_cap < 1:
        raise ValueError("step_cap must be >= 1")
    spec = LatticeSpec(epsilon / 3)
    comp = monochromatic_component(oracle, spec, start, component_cap)
    sizes = [len(comp)]
    for rounds in range(1, step_cap + 1):
        cyc = minimize_separating_cycle(comp)
        cols = cycle_colours(oracle, spec, cyc)
        verts = cyc.vertices
        n = len(verts)
        split = next((i for i in range(n) if cols[i] != cols[(i + 1) % n]), None)
        if split is None:
            comp = monochromatic_component(oracle, spec, verts[0], component_cap)
            sizes.append(len(comp))
            continue
        x, y = verts[split], verts[(split + 1) % n]
        z = next(c for c in common_neighbours(x, y) if c in comp)
        cz = oracle(embed(spec, z))
        px, py, pz = embed(spec, x), embed(spec, y), embed(spec, z)
        return TriBallCertificate(
            p=px, witnesses=(px, py, pz), coords=(x, y, z),
            colours=(int(cols[split]), int(cols[(split + 1) % n]), int(cz)),
            gamma=spec.gamma, epsilon=epsilon, rounds=rounds, component_sizes=tuple(sizes))
    raise StepCapExceeded(f"no two-coloured separating cycle within {step_cap} rounds")


def validate_ball_certificate(cert: TriBallCertificate, oracle: ColouringOracle,
                              tol: Tolerance = Tolerance()) -> None:
    """Independent re-check: recompute positions, re-query colours, re-measure."""
    if cert.gamma != cert.epsilon / 3:
        raise CertificateInvalid("gamma is not epsilon/3")
    spec = LatticeSpec(cert.gamma)
    for c, w in zip(cert.coords, cert.witnesses):
        e = embed(spec, c)
        if distance(e, w) > tol.tau:
            raise CertificateInvalid(f"witness {w} is not the lattice point {tuple(c)}")
    cols = [oracle(w) for w in cert.witnesses]
    if tuple(cols) != tuple(cert.colours):
        raise CertificateInvalid(f"re-queried colours {cols} differ from {cert.colours}")
    if len(set(cols)) != 3:
        raise CertificateInvalid(f"witness colours {cols} are not pairwise distinct")
    w = cert.witnesses
    for a in range(3):
        if distance(w[a], cert.p) > cert.epsilon / 2 + tol.tau:
            raise CertificateInvalid(f"witness {a} lies outside the ball of radius eps/2")
        for b in range(a + 1, 3):
            if distance(w[a], w[b]) > 2 * cert.gamma + tol.tau:
                raise CertificateInvalid(f"witnesses {a} and {b} are more than 2*gamma apart")


@dataclass
class SixColourCertificate:
    ball: TriBallCertificate
    wheel: FiniteGeometricGraph
    rim_colours: list[int]
    rim_colour_count: int
    total_colours: int
    rim_witness_range: tuple[float, float]
    extra: dict = field(default_factory=dict)


def six_colour_certificate(
    oracle: ColouringOracle,
    epsilon: float,
    start: tuple[int, int] = (0, 0),
    base_angle: float = 0.0,
    step_cap: int = DEFAULT_STEP_CAP,
    component_cap: int = DEFAULT_COMPONENT_CAP,
    tol: Tolerance = Tolerance(),
) -> SixColourCertificate:
    """Ball with three colours plus an odd wheel whose rim sees the whole ball.

    Raises ``OracleNotProper`` with a concrete pair if a rim chord or a
    rim-to-witness pair is monochromatic.
    """
    ball = find_trichromatic_ball(oracle, epsilon, start, step_cap, component_cap)
    validate_ball_certificate(ball, oracle, tol)
    sol = solve_odd_rotation("theorem1", epsilon)
    iv = DistanceInterval.epsilon(epsilon)
    wheel = build_wheel(ball.p, 1 + epsilon / 2, sol, base_angle, iv, tol)
    rim = [wheel.points[v] for v in wheel.meta["rim"]]
    rim_cols = [oracle(q) for q in rim]

    dists = [distance(q, w) for q in rim for w in ball.witnesses]
    lo, hi = min(dists), max(dists)
    if lo < 1 - tol.tau or hi > 1 + epsilon + tol.tau:
        raise CertificateInvalid(f"rim-to-witness distances span [{lo!r}, {hi!r}]")

    k = len(rim)
    for j in range(k):
        q, r = rim[j], rim[(j + 1) % k]
        if rim_cols[j] == rim_cols[(j + 1) % k] and in_interval(q, r, iv, tol):
            raise OracleNotProper(ViolatingPair(q, r, rim_cols[j], distance(q, r)), "rim chord")
    for j, q in enumerate(rim):
        for w, c in zip(ball.witnesses, ball.colours):
            if rim_cols[j] == c and in_interval(q, w, iv, tol):
                raise OracleNotProper(ViolatingPair(q, w, c, distance(q, w)), "rim to ball")

    rim_count = len(set(rim_cols))
    total = len(set(rim_cols) | set(ball.colours))
    if rim_count < 3:
        raise CertificateInvalid(f"odd rim shows only {rim_count} colours")  # pragma: no cover
    if total < 6:
        raise CertificateInvalid(f"only {total} colours observed")  # pragma: no cover
    return SixColourCertificate(ball, wheel, rim_cols, rim_count, total, (lo, hi),
                                {"rotation": sol})


@dataclass
class FiveColourCertificate:
    spec: BoundarySpec
    graph: FiniteGeometricGraph
    chromatic_number: int
    colouring: list[int]


def five_colour_certificate(spec: BoundarySpec, tol: Tolerance = Tolerance()) -> FiveColourCertificate:
    graph = build_boundary_witness(spec, tol)
    a_ix, b_ix = graph.meta["pseudo"]
    for j, (a_pt, b_pt) in zip(graph.meta["rim"], graph.meta["base_endpoints"]):
        apex = graph.points[j]
        for e in (a_pt, b_pt):
            if abs(distance(apex, e) - 1) > tol.tau:
                raise CertificateInvalid(f"apex {j}: triangle side is not a unit length")
            if distance(e, spec.p) >= spec.epsilon:
                raise CertificateInvalid(f"apex {j}: base endpoint outside the ball")
        sa = signed_distance_to_line(a_pt, spec.p, spec.line_angle)
        sb = signed_distance_to_line(b_pt, spec.p, spec.line_angle)
        if not (sa > 0 > sb):
            raise CertificateInvalid(f"apex {j}: base endpoints do not straddle the line")
        if a_ix not in _nbrs(graph, j) or b_ix not in _nbrs(graph, j):
            raise CertificateInvalid(f"apex {j} is not joined to both region colours")
    if graph.bad_edges():
        raise CertificateInvalid("rim chord is not a unit length")
    chi, colouring = optimal_colouring(graph.to_abstract())
    return FiveColourCertificate(spec, graph, chi, colouring)


def _nbrs(graph: FiniteGeometricGraph, v: int) -> set[int]:
    return {b if a == v else a for a, b in graph.edges if v in (a, b)}


def _fmt(x: float) -> str:
    return repr(float(x))


def ball_lines(cert: TriBallCertificate) -> list[tuple[str, str]]:
    rows = [("epsilon", _fmt(cert.epsilon)), ("gamma", _fmt(cert.gamma)),
            ("centre", f"{_fmt(cert.p.x)} {_fmt(cert.p.y)}"), ("rounds", str(cert.rounds))]
    for name, c, w, col in zip("xyz", cert.coords, cert.witnesses, cert.colours):
        rows.append((f"witness_{name}", f"{c.i} {c.j} {_fmt(w.x)} {_fmt(w.y)} {col}"))
    rows.append(("ball_colours", str(len(set(cert.colours)))))
    return rows


def six_lines(cert: SixColourCertificate) -> list[tuple[str, str]]:
    sol = cert.extra["rotation"]
    return ball_lines(cert.ball) + [
        ("rotation_k", str(sol.k)), ("rotation_m", str(sol.m)), ("delta", _fmt(sol.delta)),
        ("rim_colours", str(cert.rim_colour_count)),
        ("rim_witness_min", _fmt(cert.rim_witness_range[0])),
        ("rim_witness_max", _fmt(cert.rim_witness_range[1])),
        ("total_colours", str(cert.total_colours)),
    ]


def five_lines(cert: FiveColourCertificate) -> list[tuple[str, str]]:
    sol = cert.graph.meta["rotation"]
    return [("epsilon", _fmt(cert.spec.epsilon)), ("line_angle", _fmt(cert.spec.line_angle)),
            ("rotation_k", str(sol.k)), ("rotation_m", str(sol.m)), ("delta", _fmt(sol.delta)),
            ("vertices", str(cert.graph.n)), ("edges", str(len(cert.graph.edges))),
            ("chromatic_number", str(cert.chromatic_number))]


def structured_block(rows: list[tuple[str, str]]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in rows)


def human_report(kind: str, rows: list[tuple[str, str]]) -> str:
    d = dict(rows)
    out = [f"{kind} certificate"]
    if "ball_colours" in d:
        out.append(f"  ball of radius eps/2 at ({d['centre']}) holds {d['ball_colours']} colours")
    if "rim_colours" in d:
        out.append(f"  odd rim of {d['rotation_k']} points (step {d['rotation_m']}) "
                   f"shows {d['rim_colours']} further colours")
        out.append(f"  distinct colours observed: {d['total_colours']}")
    if "chromatic_number" in d:
        out.append(f"  odd rim of {d['rotation_k']} unit chords, each apex one unit from both regions")
        out.append(f"  chromatic number: {d['chromatic_number']}")
    return "\n".join(out) + "\n"
