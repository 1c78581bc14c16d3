"""Tensor lift: companion basis, layout, restriction, and recovery."""

from fractions import Fraction
from itertools import combinations

import pytest

from tverberg.geometry import PointConfig
from tverberg.lift import (
    companion_basis,
    lift_partition,
    lift_point,
    recover_common_point,
)
from tverberg.linalg import clear_denominators, int_rank
from tverberg.lp import ConvexWitness, hulls_intersect, origin_in_hull
from tverberg.partition import Partition

from conftest import all_labelings, point_in_hull, random_int_config

F = Fraction


def test_companion_basis_small_cases():
    b2 = companion_basis(2)
    assert b2.vectors == ((F(1),), (F(-1),))
    b3 = companion_basis(3)
    assert b3.vectors == ((F(1), F(0)), (F(0), F(1)), (F(-1), F(-1)))


def test_companion_basis_rejects_single_part():
    with pytest.raises(ValueError):
        companion_basis(1)


@pytest.mark.parametrize("r", range(2, 13))
def test_companion_basis_kernel_is_all_ones(r):
    basis = companion_basis(r)
    assert all(len(u) == r - 1 for u in basis.vectors)
    # The only dependence is the all-equal one: columns sum to zero and the
    # (r-1) x r matrix has full row rank, so the kernel is exactly span(1..1).
    for t in range(r - 1):
        assert sum(u[t] for u in basis.vectors) == 0
    rows = [
        clear_denominators(tuple(u[t] for u in basis.vectors))
        for t in range(r - 1)
    ]
    assert int_rank(rows) == r - 1


def test_lift_point_line_examples():
    assert lift_point((F(5),), (F(1),)) == (F(5), F(1))
    assert lift_point((F(5),), (F(-1),)) == (F(-5), F(-1))


def test_lift_point_row_major_layout():
    # b = (2, 3, 1); rows of b against columns of u, flattened by rows.
    got = lift_point((F(2), F(3)), (F(1), F(0)))
    assert got == (F(2), F(0), F(3), F(0), F(1), F(0))


def test_lift_point_zero_source_keeps_only_appended_row():
    got = lift_point((F(0), F(0)), (F(1), F(-1)))
    assert got == (F(0), F(0), F(0), F(0), F(1), F(-1))


def test_lift_partition_plain_two_points():
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    p = Partition(r=2, labels=(1, 2))
    lift = lift_partition(cfg, p)
    assert lift.lifted_points == ((F(1), F(1)), (F(1), F(-1)))
    assert lift.assignment == (1, 2)
    assert lift.source_index == (0, 1)
    assert lift.grouping == (0, 1)
    assert lift.part_order == (1, 2)
    assert lift.config().dim == 2


def test_lift_partition_label_alignment_checked():
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    with pytest.raises(ValueError):
        lift_partition(cfg, Partition(r=2, labels=(1, 2, 1)))


def test_lift_partition_restriction_skips_other_parts():
    cfg = PointConfig(dim=1, points=tuple((F(v),) for v in (0, 1, 2, 3, 4, 5)))
    p = Partition(r=3, labels=(1, 2, 3, 1, 2, 3))
    lift = lift_partition(cfg, p, restrict_to=(3, 1))
    assert lift.part_order == (1, 3)
    assert lift.basis.r == 2
    assert lift.source_index == (0, 2, 3, 5)
    assert lift.assignment == (1, None, 3, 1, None, 3)
    # Two chosen parts land in a (d+1)(2-1)-dimensional lift.
    assert lift.config().dim == 2


def test_lift_partition_restriction_must_name_real_parts():
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    p = Partition(r=2, labels=(1, 2))
    with pytest.raises(ValueError):
        lift_partition(cfg, p, restrict_to=(1, 5))


def _lifted_witness(cfg, p, removal=(), restrict_to=None):
    lift = lift_partition(cfg, p, restrict_to=restrict_to)
    survivors = [
        j for j, src in enumerate(lift.source_index) if src not in set(removal)
    ]
    return origin_in_hull(lift.config(), survivors)


def test_recover_symmetric_instance_balanced_witness_gives_origin():
    # Both parts span [-1, 1]; the balanced witness recovers the midpoint.
    cfg = PointConfig(
        dim=1, points=((F(-1),), (F(1),), (F(-1),), (F(1),))
    )
    p = Partition(r=2, labels=(1, 1, 2, 2))
    quarter = F(1, 4)
    balanced = ConvexWitness(
        coefficients=tuple((j, quarter) for j in range(4)),
        groups=((0, (0, 1, 2, 3)),),
    )
    point, per_part = recover_common_point(cfg, p, (), balanced)
    assert point == (F(0),)
    for part_id in (1, 2):
        coeffs = per_part[part_id]
        assert sum(w for _, w in coeffs) == 1
        assert all(p.labels[i] == part_id for i, _ in coeffs)
    # Whatever witness the solver picks must still recover a common point.
    solved = _lifted_witness(cfg, p)
    assert solved is not None
    point, _ = recover_common_point(cfg, p, (), solved)
    assert F(-1) <= point[0] <= F(1)


def test_recover_point_lies_in_every_surviving_part():
    for seed in range(6):
        cfg = random_int_config(7, 2, seed=seed)
        p = Partition(r=2, labels=(1, 2, 1, 2, 1, 2, 1))
        for removal in [(), (0,), (3, 6)]:
            witness = _lifted_witness(cfg, p, removal)
            if witness is None:
                continue
            point, per_part = recover_common_point(cfg, p, removal, witness)
            for part_id, members in enumerate(p.parts(), start=1):
                alive = [cfg.points[i] for i in members if i not in removal]
                assert point_in_hull(point, alive)
                assert sum(w for _, w in per_part[part_id]) == 1


def test_recover_respects_restriction():
    cfg = PointConfig(
        dim=1, points=((F(0),), (F(2),), (F(-2),), (F(1),), (F(9),))
    )
    p = Partition(r=3, labels=(1, 2, 3, 3, 2))
    chosen = (1, 3)
    witness = _lifted_witness(cfg, p, restrict_to=chosen)
    assert witness is not None
    point, per_part = recover_common_point(
        cfg, p, (), witness, restrict_to=chosen
    )
    assert set(per_part) == set(chosen)
    for part_id in chosen:
        alive = [cfg.points[i] for i in p.part(part_id)]
        assert point_in_hull(point, alive)


def test_recover_rejects_negative_weight():
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    p = Partition(r=2, labels=(1, 2))
    bad = ConvexWitness(
        coefficients=((0, F(3, 2)), (1, F(-1, 2))), groups=((0, (0, 1)),)
    )
    with pytest.raises(ValueError, match="negative"):
        recover_common_point(cfg, p, (), bad)


def test_recover_rejects_weight_on_removed_point():
    cfg = PointConfig(
        dim=1, points=((F(-1),), (F(1),), (F(-1),), (F(1),))
    )
    p = Partition(r=2, labels=(1, 1, 2, 2))
    quarter = F(1, 4)
    witness = ConvexWitness(
        coefficients=tuple((j, quarter) for j in range(4)),
        groups=((0, (0, 1, 2, 3)),),
    )
    with pytest.raises(ValueError, match="removed"):
        recover_common_point(cfg, p, (1,), witness)


def test_recover_rejects_unknown_lifted_index():
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    p = Partition(r=2, labels=(1, 2))
    bad = ConvexWitness(coefficients=((5, F(1)),), groups=((0, (5,)),))
    with pytest.raises(ValueError, match="unknown"):
        recover_common_point(cfg, p, (), bad)


def test_recover_rejects_non_witness_weights():
    # Valid indices, but the weights do not place the origin.
    cfg = PointConfig(dim=1, points=((F(1),), (F(-1),)))
    p = Partition(r=2, labels=(1, 2))
    bad = ConvexWitness(
        coefficients=((0, F(3, 4)), (1, F(1, 4))), groups=((0, (0, 1)),)
    )
    with pytest.raises(ValueError, match="re-substitution"):
        recover_common_point(cfg, p, (), bad)


def _bridge_agrees(cfg, p, removal):
    """Hull intersection on survivors vs origin membership in the lift."""
    survivors_by_part = [
        [i for i in members if i not in removal] for members in p.parts()
    ]
    direct = hulls_intersect(cfg, survivors_by_part)
    lifted = _lifted_witness(cfg, p, removal)
    return (direct is not None) == (lifted is not None)


def test_round_trip_all_labelings_line():
    cfg = PointConfig(dim=1, points=tuple((F(v),) for v in (0, 1, 3, 4, 7)))
    n = len(cfg.points)
    for labels in all_labelings(n, 2):
        p = Partition(r=2, labels=labels)
        for size in (0, 1, 2):
            for removal in combinations(range(n), size):
                assert _bridge_agrees(cfg, p, set(removal))


def test_round_trip_planar_three_parts():
    cfg = random_int_config(6, 2, seed=11)
    for labels in all_labelings(6, 3):
        p = Partition(r=3, labels=labels)
        for removal in [set(), {0}, {4}, {1, 5}]:
            assert _bridge_agrees(cfg, p, removal)
