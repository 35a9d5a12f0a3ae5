import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecolour.chromatic import chromatic_number
from planecolour.geometry import ORIGIN, DistanceInterval, Point, Tolerance, distance, signed_distance_to_line
from planecolour.witness import (
    BoundarySpec,
    RotationSolution,
    WitnessError,
    admissible_sine_interval,
    build_boundary_witness,
    build_wheel,
    moser_spindle,
    rim_of,
    solve_odd_rotation,
    theorem1_wheel,
)

WHEEL_EPS = [0.01, 0.05, 0.2]
BOUNDARY_EPS = [0.3, 0.5, 0.9]


def _assert_edge_rule(g):
    assert g.edge_rule is not None
    for a, b in g.geometric_edges():
        d = g.edge_length(a, b)
        assert g.edge_rule.lo - g.tol.tau <= d <= g.edge_rule.hi + g.tol.tau


def _rim_is_one_odd_cycle(g, rim):
    rset = set(rim)
    deg = {v: 0 for v in rim}
    adj = {v: [] for v in rim}
    for a, b in g.edges:
        if a in rset and b in rset:
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
    assert all(d == 2 for d in deg.values())
    seen, stack = {rim[0]}, [rim[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    assert seen == rset
    assert len(rim) % 2 == 1


def test_spindle_shape():
    g = moser_spindle()
    assert g.n == 7
    assert len(g.edges) == 11
    for a, b in g.edges:
        assert abs(g.edge_length(a, b) - 1) <= 1e-9
    assert chromatic_number(g.to_abstract()) == 4


def test_spindle_tips_are_one_apart():
    g = moser_spindle()
    assert distance(g.points[3], g.points[6]) == pytest.approx(1, abs=1e-12)
    assert distance(ORIGIN, g.points[3]) == pytest.approx(math.sqrt(3), abs=1e-12)


@pytest.mark.parametrize("eps", WHEEL_EPS)
def test_wheel_mode_rotation(eps):
    sol = solve_odd_rotation("theorem1", eps)
    assert sol.k % 2 == 1 and math.gcd(sol.m, sol.k) == 1
    assert eps / 2 < sol.delta < eps
    s = math.sin(math.pi * sol.m / sol.k)
    assert abs(s - (1 + sol.delta) / (2 + eps)) <= 1e-12
    assert abs(2 * math.asin((1 + sol.delta) / (2 + eps)) - 2 * math.pi * sol.m / sol.k) <= 1e-12


@pytest.mark.parametrize("eps", BOUNDARY_EPS)
def test_boundary_mode_rotation(eps):
    sol = solve_odd_rotation("theorem2", eps)
    assert sol.k % 2 == 1 and math.gcd(sol.m, sol.k) == 1
    assert math.sqrt(1 - eps**2 / 4) < sol.delta < 1
    assert abs(math.sin(math.pi * sol.m / sol.k) - 1 / (2 * sol.delta)) <= 1e-12


def test_rotation_pinned_values():
    # Least admissible orders found by the scan.
    s1 = solve_odd_rotation("theorem1", 0.05)
    s2 = solve_odd_rotation("theorem2", 0.5)
    assert (s1.k, s1.m) == (41, 7)
    assert (s2.k, s2.m) == (29, 5)
    assert math.sqrt(15) / 4 < s2.delta < 1


def test_rotation_is_least_odd_order():
    sol = solve_odd_rotation("theorem1", 0.05)
    lo, hi = admissible_sine_interval("theorem1", 0.05)
    for k in range(3, sol.k, 2):
        for m in range(1, (k + 1) // 2):
            if math.gcd(m, k) == 1:
                assert not lo < math.sin(math.pi * m / k) < hi


def test_open_interval_excludes_its_endpoint():
    # Pick epsilon so the upper end (1+e)/(2+e) equals sin(pi/3) exactly in floats.
    s = math.sin(math.pi / 3)
    eps = (2 * s - 1) / (1 - s)
    assert admissible_sine_interval("theorem1", eps)[1] == s
    with pytest.raises(ValueError):
        solve_odd_rotation("theorem1", eps, max_k=3)
    # A slightly larger epsilon moves the end past sin(pi/3) and admits (3, 1).
    sol = solve_odd_rotation("theorem1", eps * (1 + 1e-9), max_k=3)
    assert (sol.k, sol.m) == (3, 1)


def test_solver_rejects_bad_epsilon():
    with pytest.raises(ValueError):
        solve_odd_rotation("theorem1", 0.0)
    with pytest.raises(ValueError):
        solve_odd_rotation("theorem2", 1.0)
    with pytest.raises(ValueError):
        solve_odd_rotation("bogus", 0.5)


def test_wheel_chords_and_chromatic_numbers():
    eps = 0.05
    w = theorem1_wheel(eps)
    sol = w.meta["rotation"]
    rim = w.meta["rim"]
    _rim_is_one_odd_cycle(w, rim)
    chord = 2 * (1 + eps / 2) * math.sin(math.pi * sol.m / sol.k)
    for j in range(len(rim)):
        a, b = rim[j], rim[(j + 1) % len(rim)]
        assert abs(w.edge_length(a, b) - (1 + sol.delta)) <= 1e-9
        assert abs(w.edge_length(a, b) - chord) <= 1e-9
    _assert_edge_rule(w)
    assert chromatic_number(rim_of(w).to_abstract()) == 3
    assert chromatic_number(w.to_abstract()) == 4


def test_wheel_edge_check():
    sol = solve_odd_rotation("theorem1", 0.05)
    with pytest.raises(WitnessError):
        build_wheel(ORIGIN, 0.5, sol, edge_rule=DistanceInterval.epsilon(0.05))
    loose = build_wheel(ORIGIN, 0.5, sol, edge_rule=DistanceInterval.epsilon(0.05), check=False)
    assert loose.bad_edges()


@settings(max_examples=25, deadline=None)
@given(st.floats(0.006, 0.06), st.floats(-3, 3), st.floats(-3, 3), st.floats(0, 2 * math.pi))
def test_wheels_satisfy_their_edge_rule(eps, cx, cy, base):
    sol = solve_odd_rotation("theorem1", eps)
    w = build_wheel(Point(cx, cy), 1 + eps / 2, sol, base, DistanceInterval.epsilon(eps))
    _assert_edge_rule(w)
    _rim_is_one_odd_cycle(w, w.meta["rim"])


@pytest.mark.parametrize("eps", BOUNDARY_EPS)
def test_boundary_witness_geometry(eps):
    spec = BoundarySpec(epsilon=eps, line_angle=0.3)
    g = build_boundary_witness(spec)
    a_ix, b_ix = g.meta["pseudo"]
    assert g.points[a_ix] is None and g.points[b_ix] is None
    assert g.precolour == {a_ix: 0, b_ix: 1}
    _assert_edge_rule(g)
    _rim_is_one_odd_cycle(g, g.meta["rim"])
    for j, (a_pt, b_pt) in zip(g.meta["rim"], g.meta["base_endpoints"]):
        apex = g.points[j]
        assert abs(distance(apex, a_pt) - 1) <= 1e-9
        assert abs(distance(apex, b_pt) - 1) <= 1e-9
        assert distance(a_pt, spec.p) <= eps
        assert distance(b_pt, spec.p) <= eps
        assert signed_distance_to_line(a_pt, spec.p, spec.line_angle) > 0
        assert signed_distance_to_line(b_pt, spec.p, spec.line_angle) < 0
        assert {(j, a_ix), (j, b_ix)} <= g.edges


@settings(max_examples=20, deadline=None)
@given(st.floats(0.2, 0.95), st.floats(-math.pi, math.pi), st.floats(-5, 5), st.floats(-5, 5))
def test_boundary_endpoints_always_straddle(eps, angle, px, py):
    spec = BoundarySpec(Point(px, py), angle, 2, 5, eps)
    g = build_boundary_witness(spec)
    for a_pt, b_pt in g.meta["base_endpoints"]:
        sa = signed_distance_to_line(a_pt, spec.p, angle)
        sb = signed_distance_to_line(b_pt, spec.p, angle)
        assert sa * sb < 0


def test_boundary_chromatic_number_is_five():
    g = build_boundary_witness(BoundarySpec(epsilon=0.5))
    assert chromatic_number(g.to_abstract()) == 5


def test_boundary_spec_validation():
    with pytest.raises(ValueError):
        BoundarySpec(colour_a=1, colour_b=1)
    with pytest.raises(ValueError):
        BoundarySpec(epsilon=1.0)


def test_induced_subgraph_and_equality():
    g = moser_spindle()
    assert g == moser_spindle()
    sub = g.induced([0, 1, 2])
    assert sub.n == 3 and len(sub.edges) == 3
    assert isinstance(g.meta, dict)


def test_rotation_solution_angle():
    sol = RotationSolution(7, 2, 0.1, 2 * math.pi * 2 / 7)
    assert sol.angle.value == pytest.approx(2 * math.pi * 2 / 7)


def test_spindle_tolerance_is_respected():
    g = moser_spindle(Tolerance(1e-12))
    assert g.bad_edges() == []
