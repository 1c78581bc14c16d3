"""Tensor lift turning hull-intersection questions into origin-depth ones.

Each source point a in R^d is appended a 1 to give b = (a, 1) in R^(d+1).
Part j of a partition into r parts receives a companion vector u_j in
R^(r-1); the lifted point is the flattened outer product b (x) u_j, laid out
row-major over (b rows, u columns), so coordinates group by source
coordinate first.

The companion vectors are e_1, ..., e_(r-1), -(e_1 + ... + e_(r-1)): exact
integers whose only linear dependence is that all r of them sum to zero.
That single dependence is what makes the bridge work: convex weights on
lifted points sum to the zero vector exactly when the weighted (a, 1) sums
agree across all parts, and the shared appended-1 coordinate then rescales
every part's weights into convex coefficients for a common point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Collection, Sequence

from .geometry import PointConfig
from .linalg import Vector
from .lp import ConvexWitness
from .partition import Partition

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CompanionBasis:
    """The r companion vectors in R^(r-1), indexed by part position."""

    r: int
    vectors: tuple[Vector, ...]


@dataclass(frozen=True)
class LiftedChoice:
    """Lifted points for the assigned sources of a partition.

    ``source_index[j]`` is the source point behind lifted point j, and
    ``grouping[j]`` its block id (the source index itself: blocks are
    singletons here; callers wanting coarser blocks regroup by color).
    ``assignment`` records, per source point, the part id that was lifted,
    or None when the point's part was outside the restriction.
    """

    source: PointConfig
    assignment: tuple[int | None, ...]
    lifted_points: tuple[Vector, ...]
    grouping: tuple[int, ...]
    source_index: tuple[int, ...]
    basis: CompanionBasis
    part_order: tuple[int, ...]

    def config(self) -> PointConfig:
        lifted_dim = (self.source.dim + 1) * (self.basis.r - 1)
        return PointConfig(dim=lifted_dim, points=self.lifted_points)

    def lifted_of_source(self) -> dict[int, int]:
        return {src: j for j, src in enumerate(self.source_index)}


def companion_basis(r: int) -> CompanionBasis:
    """Companion vectors e_1, ..., e_(r-1), -(e_1 + ... + e_(r-1))."""
    if r < 2:
        raise ValueError("need at least two parts")
    vectors = [
        tuple(_ONE if t == j else _ZERO for t in range(r - 1)) for j in range(r - 1)
    ]
    vectors.append(tuple(-_ONE for _ in range(r - 1)))
    return CompanionBasis(r=r, vectors=tuple(vectors))


def lift_point(a: Vector, u: Vector) -> Vector:
    """Flattened outer product of (a, 1) with u, row-major over (a, 1)."""
    b = tuple(a) + (_ONE,)
    return tuple(bt * us for bt in b for us in u)


def lift_partition(
    cfg: PointConfig, p: Partition, restrict_to: Collection[int] | None = None
) -> LiftedChoice:
    """Lift every point whose part lies in ``restrict_to`` (default: all).

    Part ids in the restriction are sorted and mapped, in order, onto the
    companion basis for that many parts.
    """
    if len(p.labels) != len(cfg.points):
        raise ValueError("partition labels must align with the points")
    if restrict_to is None:
        part_order = tuple(range(1, p.r + 1))
    else:
        part_order = tuple(sorted(set(restrict_to)))
        if not all(1 <= j <= p.r for j in part_order):
            raise ValueError(f"restriction {part_order} exceeds parts 1..{p.r}")
    basis = companion_basis(len(part_order))
    u_of_part = {j: basis.vectors[pos] for pos, j in enumerate(part_order)}

    assignment: list[int | None] = []
    lifted: list[Vector] = []
    grouping: list[int] = []
    source_index: list[int] = []
    for i, point in enumerate(cfg.points):
        label = p.labels[i]
        if label in u_of_part:
            assignment.append(label)
            lifted.append(lift_point(point, u_of_part[label]))
            grouping.append(i)
            source_index.append(i)
        else:
            assignment.append(None)
    return LiftedChoice(
        source=cfg,
        assignment=tuple(assignment),
        lifted_points=tuple(lifted),
        grouping=tuple(grouping),
        source_index=tuple(source_index),
        basis=basis,
        part_order=part_order,
    )


def recover_common_point(
    cfg: PointConfig,
    p: Partition,
    removal: Collection[int],
    lifted_witness: ConvexWitness,
    restrict_to: Collection[int] | None = None,
) -> tuple[Vector, dict[int, list[tuple[int, Fraction]]]]:
    """Common point of the parts' hulls after a removal, from a lifted witness.

    The witness must be convex coefficients for the origin over the lifted
    points that survive the removal, indexed as in
    ``lift_partition(cfg, p, restrict_to)``.  It is re-substituted exactly
    before use; a removal that empties a part can carry no valid witness,
    and any inconsistency raises ValueError.

    Returns the common point together with, per participating part id, the
    rescaled convex coefficients on surviving source points that realize it.
    """
    lift = lift_partition(cfg, p, restrict_to=restrict_to)
    removed = set(removal)
    weights = dict(lifted_witness.coefficients)

    total = _ZERO
    acc = [_ZERO] * ((cfg.dim + 1) * (lift.basis.r - 1))
    for j, w in weights.items():
        if not 0 <= j < len(lift.lifted_points):
            raise ValueError(f"witness refers to unknown lifted point {j}")
        if w < 0:
            raise ValueError("witness fails re-substitution: negative weight")
        if w and lift.source_index[j] in removed:
            raise ValueError("witness puts weight on a removed point")
        total += w
        for t, x in enumerate(lift.lifted_points[j]):
            acc[t] += w * x
    if total != 1 or any(v != 0 for v in acc):
        raise ValueError("witness fails re-substitution")

    # Per part, the weighted sum of (a, 1); the companion kernel forces all
    # of these to agree, and the last coordinate is the part's weight mass.
    sums: dict[int, list[Fraction]] = {
        j: [_ZERO] * (cfg.dim + 1) for j in lift.part_order
    }
    for j, w in weights.items():
        src = lift.source_index[j]
        part = p.labels[src]
        b = tuple(cfg.points[src]) + (_ONE,)
        for t, x in enumerate(b):
            sums[part][t] += w * x
    reference = sums[lift.part_order[0]]
    for j in lift.part_order[1:]:
        if sums[j] != reference:
            raise ValueError(
                "witness fails re-substitution: part sums disagree "
                "(a removal emptied some part, or the weights are invalid)"
            )
    mass = reference[cfg.dim]
    if mass <= 0:
        raise ValueError("witness fails re-substitution: zero part mass")
    point = tuple(x / mass for x in reference[: cfg.dim])

    per_part: dict[int, list[tuple[int, Fraction]]] = {
        j: [] for j in lift.part_order
    }
    for j, w in sorted(weights.items()):
        if w:
            per_part[p.labels[lift.source_index[j]]].append(
                (lift.source_index[j], w / mass)
            )
    return point, per_part
