import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from planecolour.geometry import DistanceInterval, Point, Tolerance, distance
from planecolour.oracle import ConstantOracle, FunctionOracle, StripeOracle
from planecolour.tiling import (
    CANONICAL,
    CLAIMED_SEPARATION,
    LITERAL_SHIFT,
    TILE_SIDE,
    Region,
    SquareTilingSpec,
    TilingOracle,
    brute_force_separation,
    colour_at,
    is_proper_for,
    min_same_colour_separation,
    violation_search,
)

# Frozen from brute_force_separation, which colours every tile by sampling
# colour_at at its centre; the closed form never consults colour_at.
CANONICAL_SEPARATION = 0.9999999999999999
LITERAL_SEPARATION = 0.35355339059327384

coord = st.floats(-50, 50, allow_nan=False)


def test_colour_at_examples():
    assert colour_at(CANONICAL, Point(0.01, 0.01)) == 0
    assert colour_at(CANONICAL, Point(0.01 + 7 * TILE_SIDE, 0.01)) == 0
    # row 1: floor((0.01 + 5*sqrt(2)/4) / (sqrt(2)/2)) = 2
    assert colour_at(CANONICAL, Point(0.01, 0.72)) == 2


def test_rows_match_the_drawn_labels():
    # Left-to-right labels (1-based) of the first tile in rows 0..3.
    s = TILE_SIDE
    firsts = [colour_at(CANONICAL, Point(0.01, (r + 0.5) * s)) + 1 for r in range(4)]
    assert firsts == [1, 3, 6, 1]


def test_half_open_boundaries():
    s = TILE_SIDE
    assert colour_at(CANONICAL, Point(s, 0.1)) == 1
    assert colour_at(CANONICAL, Point(math.nextafter(s, 0), 0.1)) == 0


def test_spec_validation():
    with pytest.raises(ValueError):
        SquareTilingSpec(side=0.8)
    with pytest.raises(ValueError):
        SquareTilingSpec(shift_sign=0)
    with pytest.raises(ValueError):
        SquareTilingSpec(colours=0)


def test_same_row_separation_is_six_tiles():
    assert min_same_colour_separation(CANONICAL, row_window=0) == pytest.approx(6 * TILE_SIDE, abs=1e-12)


def test_separation_matches_brute_force():
    assert min_same_colour_separation(CANONICAL) == brute_force_separation(CANONICAL)
    assert min_same_colour_separation(CANONICAL) == CANONICAL_SEPARATION
    assert min_same_colour_separation(LITERAL_SHIFT) == brute_force_separation(LITERAL_SHIFT)
    assert min_same_colour_separation(LITERAL_SHIFT) == LITERAL_SEPARATION


@pytest.mark.parametrize("shift,sign", [(0.0, 1), (1.3, 1), (2.0, -1), (5 * TILE_SIDE / 2, -1)])
def test_separation_matches_brute_force_other_shifts(shift, sign):
    spec = SquareTilingSpec(row_shift=shift, shift_sign=sign)
    assert min_same_colour_separation(spec) == pytest.approx(brute_force_separation(spec), abs=1e-12)


def test_canonical_separation_reaches_claimed_bound():
    assert min_same_colour_separation(CANONICAL) >= CLAIMED_SEPARATION - 1e-9


def test_canonical_is_proper_for_unit_distance():
    assert is_proper_for(CANONICAL, DistanceInterval.unit())
    assert not is_proper_for(LITERAL_SHIFT, DistanceInterval.unit())


def test_no_violation_below_claimed_bound():
    iv = DistanceInterval(1.0, CLAIMED_SEPARATION - 1e-6)
    assert violation_search(TilingOracle(), iv, samples=10**6, seed=42) is None


def test_no_violation_at_unit_distance():
    assert violation_search(TilingOracle(), DistanceInterval.unit(), samples=10**6, seed=42) is None


def test_constant_oracle_violates_immediately():
    hit = violation_search(ConstantOracle(), DistanceInterval(1.0, 1.05), samples=1, seed=0)
    assert hit is not None and hit.colour == 0


def test_unit_square_four_colouring_violates():
    naive = FunctionOracle(lambda x, y: (math.floor(x) % 2) + 2 * (math.floor(y) % 2), 4, "naive4")
    iv = DistanceInterval(1.0, 1.05)
    hit = violation_search(naive, iv, samples=10**5, seed=0)
    assert hit is not None
    assert 1.0 - 1e-9 <= distance(hit.p, hit.q) <= 1.05 + 1e-9
    assert naive(hit.p) == naive(hit.q) == hit.colour


def test_stripes_return_a_violating_pair():
    hit = violation_search(StripeOracle(), DistanceInterval(1.0, 1.05), samples=10**4, seed=3)
    assert hit is not None
    assert StripeOracle()(hit.p) == StripeOracle()(hit.q)


def test_search_is_reproducible():
    iv = DistanceInterval(1.0, 1.0606)
    a = violation_search(TilingOracle(), iv, samples=10**5, seed=7)
    b = violation_search(TilingOracle(), iv, samples=10**5, seed=7)
    assert a == b


def test_search_rejects_bad_arguments():
    with pytest.raises(ValueError):
        violation_search(TilingOracle(), DistanceInterval.unit(), samples=0)
    with pytest.raises(ValueError):
        Region(0, 0, 0, 1)


def test_vectorised_oracle_matches_scalar():
    rng = np.random.default_rng(1)
    xs, ys = rng.uniform(-20, 20, 5000), rng.uniform(-20, 20, 5000)
    for spec in (CANONICAL, LITERAL_SHIFT):
        many = TilingOracle(spec).colour_many(xs, ys)
        single = [colour_at(spec, Point(float(x), float(y))) for x, y in zip(xs, ys)]
        assert many.tolist() == single


@settings(max_examples=60)
@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(0, 2**32 - 1))
def test_colour_constant_on_tiles(row, col, seed):
    x0, x1, y0, y1 = CANONICAL.tile_box(row, col)
    rng = np.random.default_rng(seed)
    xs = rng.uniform(x0, x1, 100)
    ys = rng.uniform(y0, y1, 100)
    expected = col % 7
    assert all(colour_at(CANONICAL, Point(float(x), float(y))) == expected for x, y in zip(xs, ys))


@given(coord, coord)
def test_period_seven_tiles(x, y):
    # Away from tile edges, where the float sum x + 7*side could round across one.
    row = math.floor(y / TILE_SIDE)
    u = (x + row * CANONICAL.row_shift) / TILE_SIDE
    assume(1e-9 < u - math.floor(u) < 1 - 1e-9)
    assert colour_at(CANONICAL, Point(x, y)) == colour_at(CANONICAL, Point(x + 7 * TILE_SIDE, y))


@settings(max_examples=300)
@given(coord, coord, st.floats(0, 2 * math.pi), st.floats(0.5, 1.5))
def test_same_colour_pairs_avoid_the_gap(x, y, theta, r):
    p = Point(x, y)
    q = Point.polar(r, theta, p)
    sep = min_same_colour_separation(CANONICAL)
    if colour_at(CANONICAL, p) == colour_at(CANONICAL, q):
        d = distance(p, q)
        assert d < 1 or d > sep - Tolerance().tau
