"""Tolerance verification for labeled point configurations.

Two independent routes are provided.  The lifted route computes the
tolerance of a partition as the half-space depth of the origin in the
companion-vector lift, minus one; its witness is the half-space
certificate pulled back to source points (or color classes).  The
exhaustive route tries every removal set of increasing size against
the hull-intersection oracle and is the ground truth the lifted route
is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .depth import DepthCertificate, block_depth, depth
from .geometry import PointConfig
from .lift import lift_partition, recover_common_point
from .limits import BudgetExceeded, default_budget
from .linalg import Vector, scalar_to_str
from .lp import hulls_intersect, origin_in_hull
from .partition import Partition

LIFTED = "lifted-depth"
EXHAUSTIVE = "exhaustive-oracle"


@dataclass(frozen=True)
class ToleranceReport:
    """Outcome of one tolerance computation.

    tolerance is -1 when the hulls do not even intersect before any
    removal.  witness_removal is a removal set of size tolerance + 1
    that breaks the intersection (sorted point indices, or sorted
    color ids when unit == "classes"); it is None only when the
    exhaustive scan was capped before finding a breaking set.
    """

    tolerance: int
    method: str
    unit: str
    witness_removal: Optional[Tuple[int, ...]]
    common_point: Optional[Vector]
    certificate: Optional[DepthCertificate]

    def to_json(self) -> dict:
        out: dict = {
            "tolerance": self.tolerance,
            "method": self.method,
            "unit": self.unit,
            "witness_removal": (
                list(self.witness_removal)
                if self.witness_removal is not None
                else None
            ),
            "common_point": (
                [scalar_to_str(x) for x in self.common_point]
                if self.common_point is not None
                else None
            ),
        }
        if self.certificate is not None:
            out["depth"] = self.certificate.depth
            out["witness_halfspace"] = {
                "normal": [scalar_to_str(x) for x in self.certificate.witness.normal],
                "offset": scalar_to_str(self.certificate.witness.offset),
            }
        return out


def _require_partition(cfg: PointConfig, p: Partition, min_parts: int = 1) -> None:
    if len(p.labels) != len(cfg.points):
        raise ValueError("partition labels a different number of points")
    if p.r < min_parts:
        raise ValueError(f"need at least {min_parts} parts")


def _lifted_common_point(cfg: PointConfig, p: Partition, lifted_cfg: PointConfig):
    witness = origin_in_hull(lifted_cfg)
    if witness is None:
        raise AssertionError("positive depth but origin not in lifted hull")
    point, _ = recover_common_point(cfg, p, (), witness)
    return point


def tolerance_by_lifted_depth(cfg: PointConfig, p: Partition) -> ToleranceReport:
    """Tolerance of the partition via origin depth in the lifted configuration.

    The witness removal is the set of source points whose lifted image
    lies in the depth certificate's half-space; removing them destroys
    every common point of the part hulls.
    """
    _require_partition(cfg, p, min_parts=2)
    lift = lift_partition(cfg, p)
    lifted_cfg = lift.config()
    cert = depth(lifted_cfg, (0,) * lifted_cfg.dim)
    removal = sorted(
        {
            lift.source_index[j]
            for j, q in enumerate(lifted_cfg.points)
            if cert.witness.contains(q)
        }
    )
    if len(removal) != cert.depth:
        raise AssertionError("lifted witness does not match certified depth")
    common = None
    if cert.depth >= 1:
        common = _lifted_common_point(cfg, p, lifted_cfg)
    return ToleranceReport(
        tolerance=cert.depth - 1,
        method=LIFTED,
        unit="points",
        witness_removal=tuple(removal),
        common_point=common,
        certificate=cert,
    )


def tolerance_exhaustive(
    cfg: PointConfig,
    p: Partition,
    t_cap: Optional[int] = None,
    budget: Optional[int] = None,
) -> ToleranceReport:
    """Tolerance by trying every removal set in increasing size.

    Removal sets are scanned in size order, lexicographically within a
    size, so the reported witness is canonical.  Without a cap the scan
    runs to the smallest part size, where a breaking set is guaranteed,
    so the result is exact; with t_cap the scan stops after size
    t_cap + 1 and may return t_cap with witness_removal None.

    Every hull-intersection query counts against the budget; the scan
    refuses up front (per size level) when the level would exceed it.
    """
    _require_partition(cfg, p)
    if budget is None:
        budget = default_budget()
    n = len(cfg.points)
    parts = p.parts()
    cap = min(len(part) for part in parts) - 1
    if t_cap is not None:
        if t_cap < 0:
            raise ValueError("t_cap must be nonnegative")
        cap = min(cap, t_cap)
    capped = t_cap is not None and cap == t_cap

    spent = 0
    common: Optional[Vector] = None
    for s in range(cap + 2):
        level = comb(n, s)
        if spent + level > budget:
            raise BudgetExceeded(
                required=spent + level,
                budget=budget,
                context=f"removal scan at size {s} needs {level} more hull queries",
            )
        spent += level
        for removal in combinations(range(n), s):
            gone = set(removal)
            survivors = [
                [i for i in part if i not in gone] for part in parts
            ]
            result = hulls_intersect(cfg, survivors)
            if result is None:
                return ToleranceReport(
                    tolerance=s - 1,
                    method=EXHAUSTIVE,
                    unit="points",
                    witness_removal=removal,
                    common_point=common,
                    certificate=None,
                )
            if s == 0:
                common = result[0]
    if not capped:
        raise AssertionError("scan passed the smallest part without breaking")
    return ToleranceReport(
        tolerance=cap,
        method=EXHAUSTIVE,
        unit="points",
        witness_removal=None,
        common_point=common,
        certificate=None,
    )


def _color_classes_for_partition(
    cfg: PointConfig, p: Partition
) -> Dict[int, List[int]]:
    if cfg.colors is None:
        raise ValueError("configuration has no colors")
    classes = cfg.color_classes()
    for color, members in classes.items():
        if len(members) != p.r:
            raise ValueError(
                f"color class {color} has {len(members)} points, expected {p.r}"
            )
        seen = {p.labels[i] for i in members}
        if len(seen) != p.r:
            raise ValueError(f"color class {color} is not spread over all parts")
    return classes


def colored_tolerance(
    cfg: PointConfig,
    p: Partition,
    method: str = LIFTED,
    t_cap: Optional[int] = None,
    budget: Optional[int] = None,
) -> ToleranceReport:
    """Class-removal tolerance of a rainbow partition.

    Each color class must have exactly one point in every part.  The
    unit of removal is a whole color class; tolerance t means the part
    hulls still intersect after deleting the points of any t classes.
    """
    _require_partition(cfg, p)
    classes = _color_classes_for_partition(cfg, p)
    colors = sorted(classes)

    if method == LIFTED:
        if p.r < 2:
            raise ValueError("the lifted method needs at least two parts")
        lift = lift_partition(cfg, p)
        lifted_cfg = lift.config()
        blocks = [
            [
                j
                for j in range(len(lifted_cfg.points))
                if cfg.colors[lift.source_index[j]] == color
            ]
            for color in colors
        ]
        cert = block_depth(lifted_cfg, blocks, (0,) * lifted_cfg.dim)
        removal = sorted(
            {
                cfg.colors[lift.source_index[j]]
                for j, q in enumerate(lifted_cfg.points)
                if cert.witness.contains(q)
            }
        )
        if len(removal) != cert.depth:
            raise AssertionError("lifted witness does not match certified block depth")
        common = None
        if cert.depth >= 1:
            common = _lifted_common_point(cfg, p, lifted_cfg)
        return ToleranceReport(
            tolerance=cert.depth - 1,
            method=LIFTED,
            unit="classes",
            witness_removal=tuple(removal),
            common_point=common,
            certificate=cert,
        )

    if method != EXHAUSTIVE:
        raise ValueError(f"unknown method {method!r}")
    if budget is None:
        budget = default_budget()
    cap = len(colors) - 1
    if t_cap is not None:
        if t_cap < 0:
            raise ValueError("t_cap must be nonnegative")
        cap = min(cap, t_cap)
    capped = t_cap is not None and cap == t_cap

    parts = p.parts()
    spent = 0
    common = None
    for s in range(cap + 2):
        level = comb(len(colors), s)
        if spent + level > budget:
            raise BudgetExceeded(
                required=spent + level,
                budget=budget,
                context=f"class-removal scan at size {s} needs {level} more hull queries",
            )
        spent += level
        for removed_colors in combinations(colors, s):
            gone = {i for c in removed_colors for i in classes[c]}
            survivors = [
                [i for i in part if i not in gone] for part in parts
            ]
            result = hulls_intersect(cfg, survivors)
            if result is None:
                return ToleranceReport(
                    tolerance=s - 1,
                    method=EXHAUSTIVE,
                    unit="classes",
                    witness_removal=removed_colors,
                    common_point=common,
                    certificate=None,
                )
            if s == 0:
                common = result[0]
    if not capped:
        raise AssertionError("scan removed every class without breaking")
    return ToleranceReport(
        tolerance=cap,
        method=EXHAUSTIVE,
        unit="classes",
        witness_removal=None,
        common_point=common,
        certificate=None,
    )


@dataclass(frozen=True)
class ReayReport:
    """Minimum tolerance over all k-subsets of parts, with per-subset detail."""

    tolerance: int
    k: int
    tuples: Tuple[Tuple[Tuple[int, ...], ToleranceReport], ...]

    def to_json(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "k": self.k,
            "tuples": [
                {"parts": list(parts), **report.to_json()}
                for parts, report in self.tuples
            ],
        }


def reay_tolerance(
    cfg: PointConfig,
    p: Partition,
    k: int,
    method: str = LIFTED,
    budget: Optional[int] = None,
) -> ReayReport:
    """Largest t such that every k of the r part hulls share a point after
    any removal of at most t points.

    Computed as the minimum of the plain tolerance over all C(r, k)
    part subsets; removals for a subset range over the points of that
    subset's parts only (removing other points cannot affect it).
    """
    _require_partition(cfg, p)
    if not 2 <= k <= p.r:
        raise ValueError("k must lie in 2..r")
    if method not in (LIFTED, EXHAUSTIVE):
        raise ValueError(f"unknown method {method!r}")
    if budget is None:
        budget = default_budget()

    parts = p.parts()
    spent = 0
    results: List[Tuple[Tuple[int, ...], ToleranceReport]] = []
    for chosen in combinations(range(1, p.r + 1), k):
        members = sorted(i for pid in chosen for i in parts[pid - 1])
        if method == LIFTED:
            report = _reay_tuple_lifted(cfg, p, chosen, members)
        else:
            report, spent = _reay_tuple_exhaustive(
                cfg, p, chosen, members, budget, spent
            )
        results.append((chosen, report))
    overall = min(report.tolerance for _, report in results)
    return ReayReport(tolerance=overall, k=k, tuples=tuple(results))


def _reay_tuple_lifted(
    cfg: PointConfig,
    p: Partition,
    chosen: Tuple[int, ...],
    members: Sequence[int],
) -> ToleranceReport:
    if not members:
        return ToleranceReport(
            tolerance=-1,
            method=LIFTED,
            unit="points",
            witness_removal=(),
            common_point=None,
            certificate=None,
        )
    lift = lift_partition(cfg, p, restrict_to=chosen)
    lifted_cfg = lift.config()
    cert = depth(lifted_cfg, (0,) * lifted_cfg.dim)
    removal = sorted(
        {
            lift.source_index[j]
            for j, q in enumerate(lifted_cfg.points)
            if cert.witness.contains(q)
        }
    )
    if len(removal) != cert.depth:
        raise AssertionError("lifted witness does not match certified depth")
    common = None
    if cert.depth >= 1:
        witness = origin_in_hull(lifted_cfg)
        if witness is None:
            raise AssertionError("positive depth but origin not in lifted hull")
        point, _ = recover_common_point(cfg, p, (), witness, restrict_to=chosen)
        common = point
    return ToleranceReport(
        tolerance=cert.depth - 1,
        method=LIFTED,
        unit="points",
        witness_removal=tuple(removal),
        common_point=common,
        certificate=cert,
    )


def _reay_tuple_exhaustive(
    cfg: PointConfig,
    p: Partition,
    chosen: Tuple[int, ...],
    members: Sequence[int],
    budget: int,
    spent: int,
) -> Tuple[ToleranceReport, int]:
    parts = p.parts()
    cap = min(len(parts[pid - 1]) for pid in chosen) - 1
    common: Optional[Vector] = None
    for s in range(cap + 2):
        level = comb(len(members), s)
        if spent + level > budget:
            raise BudgetExceeded(
                required=spent + level,
                budget=budget,
                context=(
                    f"removal scan for parts {chosen} at size {s} "
                    f"needs {level} more hull queries"
                ),
            )
        spent += level
        for removal in combinations(members, s):
            gone = set(removal)
            survivors = [
                [i for i in parts[pid - 1] if i not in gone] for pid in chosen
            ]
            result = hulls_intersect(cfg, survivors)
            if result is None:
                report = ToleranceReport(
                    tolerance=s - 1,
                    method=EXHAUSTIVE,
                    unit="points",
                    witness_removal=removal,
                    common_point=common,
                    certificate=None,
                )
                return report, spent
            if s == 0:
                common = result[0]
    raise AssertionError("scan passed the smallest chosen part without breaking")
