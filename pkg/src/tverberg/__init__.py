"""Tolerant Tverberg partitions with exact certificates.

Exact rational geometry (hull membership, half-space depth), the
companion-vector lift identifying a partition's tolerance with an
origin depth, closed-form guarantees for random partitions, and seeded
randomized search that returns certified results.
"""

from .bounds import (
    carath_depth_bound,
    carath_guaranteed_depth,
    colored_tolerance_from_n,
    fixed_point_probability,
    n_for_probability,
    n_for_tolerance,
    reay_tolerance_from_m,
    sign_tolerance_from_n,
    tolerance_from_n,
)
from .depth import DepthCertificate, block_depth, candidate_halfspaces, depth, depth_oracle
from .engine import (
    ColorfulBlockChoice,
    SignAssignment,
    certified_colored_partition,
    certified_partition,
    certified_reay_partition,
    random_block_choice,
    random_partition,
    sign_assignment,
)
from .gen import colored_classes, grid_points, line_points, uniform_ball
from .geometry import (
    HalfSpace,
    PointConfig,
    affine_rank,
    config_from_json,
    config_to_json,
    general_position_wrt_origin,
    load_config,
    load_csv,
    make_config,
    save_config,
    side_counts,
)
from .lift import (
    CompanionBasis,
    LiftedChoice,
    companion_basis,
    lift_partition,
    lift_point,
    recover_common_point,
)
from .limits import BudgetExceeded, default_budget
from .lp import ConvexWitness, hulls_intersect, origin_in_hull
from .partition import Partition
from .perms import derangements, forbidden_avoidance_count
from .verify import (
    ReayReport,
    ToleranceReport,
    colored_tolerance,
    reay_tolerance,
    tolerance_by_lifted_depth,
    tolerance_exhaustive,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ColorfulBlockChoice",
    "CompanionBasis",
    "ConvexWitness",
    "DepthCertificate",
    "HalfSpace",
    "LiftedChoice",
    "Partition",
    "PointConfig",
    "ReayReport",
    "SignAssignment",
    "ToleranceReport",
    "affine_rank",
    "block_depth",
    "candidate_halfspaces",
    "carath_depth_bound",
    "carath_guaranteed_depth",
    "certified_colored_partition",
    "certified_partition",
    "certified_reay_partition",
    "colored_classes",
    "colored_tolerance",
    "colored_tolerance_from_n",
    "companion_basis",
    "config_from_json",
    "config_to_json",
    "default_budget",
    "depth",
    "depth_oracle",
    "derangements",
    "fixed_point_probability",
    "forbidden_avoidance_count",
    "general_position_wrt_origin",
    "grid_points",
    "hulls_intersect",
    "lift_partition",
    "lift_point",
    "line_points",
    "load_config",
    "load_csv",
    "make_config",
    "n_for_probability",
    "n_for_tolerance",
    "origin_in_hull",
    "random_block_choice",
    "random_partition",
    "reay_tolerance",
    "reay_tolerance_from_m",
    "recover_common_point",
    "save_config",
    "side_counts",
    "sign_assignment",
    "sign_tolerance_from_n",
    "tolerance_by_lifted_depth",
    "tolerance_exhaustive",
    "tolerance_from_n",
    "uniform_ball",
]
