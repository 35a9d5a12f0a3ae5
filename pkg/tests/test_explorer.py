import dataclasses
import math

import numpy as np
import pytest

from _support import seeded_starts
from planecolour.explorer import (
    CertificateInvalid,
    OracleNotProper,
    StepCapExceeded,
    ball_lines,
    cycle_colours,
    find_trichromatic_ball,
    five_colour_certificate,
    five_lines,
    human_report,
    six_colour_certificate,
    six_lines,
    structured_block,
    validate_ball_certificate,
)
from planecolour.geometry import DistanceInterval, Point, distance, in_interval
from planecolour.lattice import LatticeSpec, embed, minimize_separating_cycle, monochromatic_component
from planecolour.oracle import ConstantOracle, FunctionOracle, StripeOracle
from planecolour.tiling import LITERAL_SHIFT, TilingOracle
from planecolour.witness import BoundarySpec

EPS = 0.05
TILING = TilingOracle()
SQUARES4 = FunctionOracle(lambda x, y: (math.floor(x / 0.5) % 2) + 2 * (math.floor(y / 0.5) % 2),
                          4, "squares4")


def _assert_genuine_violation(oracle, exc: OracleNotProper, eps: float):
    pair = exc.pair
    assert oracle(pair.p) == oracle(pair.q) == pair.colour
    assert in_interval(pair.p, pair.q, DistanceInterval.epsilon(eps))
    assert pair.dist == pytest.approx(distance(pair.p, pair.q), abs=1e-12)


def test_ball_certificate_at_origin():
    cert = find_trichromatic_ball(TILING, EPS)
    validate_ball_certificate(cert, TILING)
    assert len(set(cert.colours)) == 3
    assert cert.gamma == EPS / 3
    for w in cert.witnesses:
        assert distance(w, cert.p) <= EPS / 2


@pytest.mark.parametrize("start", seeded_starts(8, seed=99))
def test_ball_certificates_revalidate(start):
    cert = find_trichromatic_ball(TILING, EPS, start)
    validate_ball_certificate(cert, TILING)


def test_tampered_certificates_are_rejected():
    cert = find_trichromatic_ball(TILING, EPS)
    moved = dataclasses.replace(cert, witnesses=(cert.witnesses[0], cert.witnesses[1], Point(5, 5)))
    with pytest.raises(CertificateInvalid):
        validate_ball_certificate(moved, TILING)
    recoloured = dataclasses.replace(cert, colours=(cert.colours[0], cert.colours[0], cert.colours[2]))
    with pytest.raises(CertificateInvalid):
        validate_ball_certificate(recoloured, TILING)
    with pytest.raises(CertificateInvalid):
        validate_ball_certificate(dataclasses.replace(cert, gamma=0.02), TILING)


def test_cycle_colour_batch_matches_single_queries():
    spec = LatticeSpec(EPS / 3)
    for start in seeded_starts(5, seed=3):
        cyc = minimize_separating_cycle(monochromatic_component(TILING, spec, start))
        batch = cycle_colours(TILING, spec, cyc)
        assert isinstance(batch, np.ndarray)
        assert batch.tolist() == [TILING(embed(spec, c)) for c in cyc]


def test_six_colour_certificate_at_origin():
    cert = six_colour_certificate(TILING, EPS)
    assert cert.total_colours >= 6
    assert cert.rim_colour_count >= 3
    assert len(set(cert.ball.colours)) == 3
    lo, hi = cert.rim_witness_range
    assert lo >= 1 - 1e-9 and hi <= 1 + EPS + 1e-9
    rim = [cert.wheel.points[v] for v in cert.wheel.meta["rim"]]
    assert [TILING(q) for q in rim] == cert.rim_colours
    assert len(rim) % 2 == 1


@pytest.mark.parametrize("start", seeded_starts(20))
def test_six_colours_from_random_starts(start):
    assert six_colour_certificate(TILING, EPS, start).total_colours >= 6


def test_sweep_yields_colours_or_a_concrete_violation():
    outcomes = {"certified": 0, "violation": 0}
    for start in seeded_starts(100, seed=1, spread=300):
        try:
            cert = six_colour_certificate(TILING, EPS, start)
        except OracleNotProper as exc:
            _assert_genuine_violation(TILING, exc, EPS)
            outcomes["violation"] += 1
        else:
            assert cert.total_colours >= 6
            outcomes["certified"] += 1
    # The tiling is only proper up to distance 1, so some wheels land on a violation.
    assert outcomes["certified"] > 0 and outcomes["violation"] > 0


@pytest.mark.parametrize("oracle", [SQUARES4, TilingOracle(LITERAL_SHIFT)], ids=["squares4", "literal"])
def test_improper_oracles_are_caught(oracle):
    with pytest.raises(OracleNotProper) as info:
        six_colour_certificate(oracle, EPS)
    _assert_genuine_violation(oracle, info.value, EPS)


def test_infinite_components_hit_the_cap():
    from planecolour.lattice import ComponentCapExceeded
    with pytest.raises(ComponentCapExceeded):
        find_trichromatic_ball(StripeOracle(), EPS, component_cap=5000)
    with pytest.raises(ComponentCapExceeded):
        find_trichromatic_ball(ConstantOracle(), EPS, component_cap=5000)


def test_step_cap():
    # Concentric annuli: each component is enclosed by a cycle in the next annulus.
    two = FunctionOracle(lambda x, y: int(math.hypot(x, y) // 0.2) % 2, 2, "rings")
    with pytest.raises(StepCapExceeded):
        find_trichromatic_ball(two, EPS, step_cap=3)
    with pytest.raises(ValueError):
        find_trichromatic_ball(TILING, EPS, step_cap=0)


def test_epsilon_range_is_enforced():
    with pytest.raises(ValueError):
        find_trichromatic_ball(TILING, 0.07)
    with pytest.raises(ValueError):
        find_trichromatic_ball(TILING, 0.0)


def test_five_colour_certificate():
    cert = five_colour_certificate(BoundarySpec(epsilon=0.5))
    assert cert.chromatic_number == 5
    a_ix, b_ix = cert.graph.meta["pseudo"]
    assert cert.colouring[a_ix] == 0 and cert.colouring[b_ix] == 1
    assert cert.graph.to_abstract().is_proper(cert.colouring)
    assert "chromatic number: 5" in human_report("five-colour", five_lines(cert))


@pytest.mark.parametrize("angle", [0.0, 0.7, -2.1])
def test_five_colour_certificate_any_line(angle):
    assert five_colour_certificate(BoundarySpec(line_angle=angle, epsilon=0.5)).chromatic_number == 5


def test_structured_blocks_round_trip():
    cert = six_colour_certificate(TILING, EPS)
    block = structured_block(six_lines(cert))
    parsed = dict(line.split(": ", 1) for line in block.splitlines())
    assert int(parsed["total_colours"]) == cert.total_colours
    assert float(parsed["epsilon"]) == EPS
    assert parsed["rotation_k"] == str(cert.extra["rotation"].k)
    ball = dict(ball_lines(cert.ball))
    assert ball["ball_colours"] == "3"
