"""Randomized search engines: determinism, refusals, certified outputs."""

import math
from collections import Counter
from fractions import Fraction

import pytest

from tverberg.engine import (
    ColorfulBlockChoice,
    SignAssignment,
    certified_colored_partition,
    certified_partition,
    certified_reay_partition,
    random_block_choice,
    random_partition,
    sign_assignment,
)
from tverberg.gen import colored_classes, line_points, uniform_ball
from tverberg.geometry import PointConfig
from tverberg.verify import tolerance_exhaustive

F = Fraction


def test_sign_assignment_type_validates():
    SignAssignment((1, -1, 1))
    with pytest.raises(ValueError):
        SignAssignment((1, 0, -1))


def test_block_choice_type_validates():
    ColorfulBlockChoice((2, 1, 3))
    with pytest.raises(ValueError):
        ColorfulBlockChoice((1, 1, 2))


def test_random_partition_deterministic_and_in_range():
    p = random_partition(40, 3, seed=5)
    q = random_partition(40, 3, seed=5)
    assert p == q
    assert p.r == 3
    assert all(1 <= l <= 3 for l in p.labels)
    assert random_partition(40, 3, seed=6) != p


def test_random_partition_label_frequencies():
    n, r = 30_000, 3
    counts = Counter(random_partition(n, r, seed=123).labels)
    expected = n / r
    sigma = math.sqrt(n * (1 / r) * (1 - 1 / r))
    for label in range(1, r + 1):
        assert abs(counts[label] - expected) < 3 * sigma


def test_random_block_choice_single_part_is_identity():
    assert random_block_choice(1, seed=9).images == (1,)


def test_random_block_choice_deterministic():
    assert random_block_choice(5, seed=3) == random_block_choice(5, seed=3)


def test_random_block_choice_fixed_point_rate():
    # P(at least one member stays at its own position) for r=3 is 2/3.
    trials = 100_000
    hits = 0
    for s in range(trials):
        images = random_block_choice(3, seed=s).images
        if any(images[pos] == pos + 1 for pos in range(3)):
            hits += 1
    p = 2 / 3
    sigma = math.sqrt(trials * p * (1 - p))
    assert abs(hits - trials * p) < 3 * sigma


def test_certified_partition_deterministic():
    cfg = line_points(12)
    a = certified_partition(cfg, 2, 3, seed=0, max_trials=50)
    b = certified_partition(cfg, 2, 3, seed=0, max_trials=50)
    assert a is not None and b is not None
    assert a[0] == b[0]
    assert a[1].tolerance == b[1].tolerance >= 3


def test_certified_partition_matches_exhaustive_oracle():
    cfg = line_points(10)
    found = certified_partition(cfg, 2, 2, seed=1, max_trials=80)
    assert found is not None
    p, report = found
    assert report.tolerance >= 2
    assert tolerance_exhaustive(cfg, p).tolerance == report.tolerance


def test_certified_partition_pigeonhole_refusal():
    # n <= r * t means some part is small enough to wipe out; no search.
    cfg = line_points(6)
    assert certified_partition(cfg, 2, 3, seed=0) is None
    assert certified_partition(cfg, 3, 2, seed=0) is None


def test_certified_partition_zero_target_easy():
    cfg = line_points(4)
    found = certified_partition(cfg, 2, 0, seed=0, max_trials=30)
    assert found is not None
    assert found[1].tolerance >= 0


def test_certified_colored_partition_deterministic_and_certified():
    cfg = colored_classes(6, 2, dim=2, radius=10, seed=4)
    found = certified_colored_partition(cfg, 1, seed=2, max_trials=60)
    again = certified_colored_partition(cfg, 1, seed=2, max_trials=60)
    assert found is not None and again is not None
    assert found[0] == again[0]
    assert found[1].tolerance >= 1
    assert found[1].unit == "classes"
    # Rainbow structure: each class spreads over both parts.
    classes = cfg.color_classes()
    for members in classes.values():
        assert sorted(found[0].labels[i] for i in members) == [1, 2]


def test_certified_colored_partition_class_budget_refusal():
    cfg = colored_classes(4, 2, dim=1, radius=5, seed=0)
    # Only 4 classes: removing 4 exceeds what class-tolerance can certify.
    assert certified_colored_partition(cfg, 4, seed=0) is None


def test_certified_colored_partition_requires_uniform_classes():
    pts = ((F(0),), (F(1),), (F(2),))
    cfg = PointConfig(dim=1, points=pts, colors=(1, 1, 2))
    with pytest.raises(ValueError):
        certified_colored_partition(cfg, 0, seed=0)


def test_certified_reay_with_k_equal_r_matches_plain():
    cfg = line_points(10)
    plain = certified_partition(cfg, 2, 2, seed=3, max_trials=60)
    reay = certified_reay_partition(cfg, 2, 2, 2, seed=3, max_trials=60)
    assert plain is not None and reay is not None
    assert plain[0] == reay[0]
    assert plain[1].tolerance == reay[1].tolerance


def test_certified_reay_k_validation():
    cfg = line_points(8)
    with pytest.raises(ValueError):
        certified_reay_partition(cfg, 3, 1, 0, seed=0)
    with pytest.raises(ValueError):
        certified_reay_partition(cfg, 3, 4, 0, seed=0)


def test_sign_assignment_small_example():
    # Points 1, -1, 1 on the line: flipping the middle sign puts all mass
    # on one side; the best draws balance signs around the origin.
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),), (F(1),)))
    best, tolerance = sign_assignment(cfg, seed=0, max_trials=40)
    assert isinstance(best, SignAssignment)
    assert tolerance == 0
    signed = [s * x for s, (x,) in zip(best.signs, cfg.points)]
    assert min(signed) < 0 < max(signed)


def test_sign_assignment_balanced_line_reaches_half():
    # All points identical: tolerance is floor(n/2) - 1 when the signs
    # split as evenly as possible, and random flips find that quickly.
    cfg = PointConfig(dim=1, points=tuple((F(1),) for _ in range(9)))
    _, tolerance = sign_assignment(cfg, seed=1, max_trials=200)
    assert tolerance == 3


def test_sign_assignment_deterministic():
    cfg = uniform_ball(8, 2, radius=5, seed=6)
    assert sign_assignment(cfg, seed=9) == sign_assignment(cfg, seed=9)
