"""Closed-form tolerance bounds: frozen values and shape properties."""

import math
from fractions import Fraction

import pytest

from tverberg.bounds import (
    carath_depth_bound,
    carath_guaranteed_depth,
    carath_slack,
    colored_tolerance_from_n,
    fixed_point_probability,
    n_for_probability,
    n_for_tolerance,
    plain_slack,
    reay_tolerance_from_m,
    sign_tolerance_from_n,
    tolerance_from_n,
)


def test_plain_tolerance_frozen_values():
    assert tolerance_from_n(100, 1, 2) == 26
    # Tiny n: the slack dominates and the bound goes (far) negative.
    assert tolerance_from_n(4, 10, 2) == -5


def test_plain_tolerance_grows_for_large_n():
    prev = tolerance_from_n(10_000, 1, 2)
    for n in range(11_000, 30_001, 1000):
        cur = tolerance_from_n(n, 1, 2)
        assert cur > prev
        prev = cur


def test_plain_tolerance_decreases_in_dimension_and_parts():
    base = tolerance_from_n(500, 1, 2)
    assert tolerance_from_n(500, 3, 2) < base
    assert tolerance_from_n(500, 1, 4) < base


def test_n_for_tolerance_frozen_values():
    assert n_for_tolerance(26, 1, 2) == 98
    assert n_for_tolerance(25, 1, 2) == 95


def test_n_for_tolerance_inverts_tolerance_from_n():
    for n in (50, 100, 400, 1000):
        t = tolerance_from_n(n, 1, 2)
        if t >= 0:
            assert n_for_tolerance(t, 1, 2) <= n
            assert tolerance_from_n(n_for_tolerance(t, 1, 2), 1, 2) >= t


def test_n_for_probability_frozen_values():
    assert n_for_probability(25, 1, 2, 0.5) == 100
    assert n_for_probability(10, 2, 2, 0.5) == 68


def test_n_for_probability_monotone_in_confidence():
    # Harder confidence targets (smaller failure budget) need more points.
    sizes = [n_for_probability(10, 2, 2, eps) for eps in (0.5, 0.1, 0.01)]
    assert sizes == sorted(sizes)
    assert sizes[0] < sizes[-1]


def test_n_for_probability_guarantee_exceeds_requested_tolerance():
    for eps in (0.5, 0.25):
        n = n_for_probability(8, 2, 3, eps)
        lam = math.sqrt(
            0.5 * (3 * 2 * n * math.log(n * 3) + n * math.log(1 / eps))
        )
        assert 8 + 1 <= n / 3 - lam


def test_fixed_point_probability_values():
    assert fixed_point_probability(1) == Fraction(1)
    assert fixed_point_probability(2) == Fraction(1, 2)
    assert fixed_point_probability(3) == Fraction(2, 3)
    assert fixed_point_probability(4) == Fraction(5, 8)
    limit = 1 - 1 / math.e
    assert abs(float(fixed_point_probability(10)) - limit) < 1e-6


def test_colored_tolerance_frozen_value():
    assert colored_tolerance_from_n(200, 1, 3) == 77


def test_colored_tolerance_below_plain():
    # Random grouping wastes some points, so the colored bound is weaker.
    for n in (200, 500, 1000):
        assert colored_tolerance_from_n(n, 1, 2) <= tolerance_from_n(n, 1, 2)


def test_reay_tolerance_frozen_value():
    assert reay_tolerance_from_m(100, 1, 3, 2) == 8


def test_reay_with_all_parts_matches_plain():
    for m, d, r in [(100, 1, 2), (100, 1, 3), (240, 2, 3), (500, 3, 4)]:
        assert reay_tolerance_from_m(m, d, r, r) == tolerance_from_n(m, d, r)


def test_reay_tolerance_shrinks_with_more_simultaneous_parts():
    values = [reay_tolerance_from_m(300, 1, 4, k) for k in (2, 3, 4)]
    assert values == sorted(values, reverse=True)


def test_carath_depth_frozen_value():
    bound = carath_depth_bound(100, 2, 2)
    assert 26.9 < bound < 27.1
    assert carath_guaranteed_depth(100, 2, 2) == 27


def test_carath_single_part_keeps_all_points():
    # r=1 is degenerate: every point joins the single hull.
    assert carath_depth_bound(50, 2, 1) == 50 - carath_slack(50, 2, 1)


def test_carath_guaranteed_depth_never_negative():
    assert carath_guaranteed_depth(4, 3, 2) == 0


def test_sign_tolerance_tracks_two_part_carath():
    n, d = 100, 2
    assert sign_tolerance_from_n(n, d) == math.ceil(carath_depth_bound(n, d, 2)) - 1
    assert sign_tolerance_from_n(10, 5) <= 0 or sign_tolerance_from_n(10, 5) >= 0


def test_plain_slack_positive_and_growing():
    assert plain_slack(100, 1, 2) > 0
    assert plain_slack(400, 1, 2) > plain_slack(100, 1, 2)


@pytest.mark.parametrize(
    "fn, args",
    [
        (tolerance_from_n, (0, 1, 2)),
        (tolerance_from_n, (10, 0, 2)),
        (tolerance_from_n, (10, 1, 1)),
        (n_for_tolerance, (-1, 1, 2)),
        (n_for_probability, (5, 1, 2, 0.0)),
        (n_for_probability, (5, 1, 2, 1.5)),
        (reay_tolerance_from_m, (100, 1, 3, 4)),
        (reay_tolerance_from_m, (100, 1, 3, 1)),
        (carath_depth_bound, (10, 1, 0)),
        (fixed_point_probability, (0,)),
    ],
)
def test_invalid_parameters_rejected(fn, args):
    with pytest.raises(ValueError):
        fn(*args)
