"""Tolerant Tverberg partitions with exact rational verification.

Compute partitions whose part hulls keep a common point even after a
bounded number of adversarial deletions (tight interleaving on the
line, halve-pair-project lifting above it, chunk-and-merge on top of
regular solvers), and verify tolerance, Tukey depth and centerpoint
claims exactly via rational LP feasibility and exhaustive search.
"""

from .core import (
    BudgetExceededError,
    DimensionError,
    IncompatibleBlocksError,
    IndexedPartition,
    InvalidPartitionError,
    Point,
    PointSet,
    RankError,
    RemovalSet,
    Scalar,
    ShapeError,
    TooFewPointsError,
    TverbergError,
    lex_key,
    order_key_1d,
    to_scalar,
    total_order_1d,
    validate_partition,
)
from .generate import random_point_set
from .lifting import PairProjection, halve_and_pair, lift_partition, tolerant_tverberg_lifted
from .lp import LPOutcome, LPProblem, common_intersection_point, lp_feasible, point_in_hull
from .merging import MergeBlock, MergeResult, chunk_and_merge, merge_partitions
from .one_d import OneDResult, max_tolerance_1d, tolerant_tverberg_1d
from .reduction import ReducedInstance, center_to_tolerant_instance
from .selection import select
from .solvers import (
    BRUTE_FORCE_CAP,
    SolverContract,
    brute_force_tverberg,
    get_solver,
    restricted_growth_strings,
)
from .svgplot import render_svg
from .verification import (
    DEFAULT_BUDGET,
    ToleranceVerdict,
    exact_tolerance,
    is_centerpoint,
    tukey_depth,
    verify_tolerance,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_CAP",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "DimensionError",
    "IncompatibleBlocksError",
    "IndexedPartition",
    "InvalidPartitionError",
    "LPOutcome",
    "LPProblem",
    "MergeBlock",
    "MergeResult",
    "OneDResult",
    "PairProjection",
    "Point",
    "PointSet",
    "RankError",
    "ReducedInstance",
    "RemovalSet",
    "Scalar",
    "ShapeError",
    "SolverContract",
    "ToleranceVerdict",
    "TooFewPointsError",
    "TverbergError",
    "brute_force_tverberg",
    "center_to_tolerant_instance",
    "chunk_and_merge",
    "common_intersection_point",
    "exact_tolerance",
    "get_solver",
    "halve_and_pair",
    "is_centerpoint",
    "lex_key",
    "lift_partition",
    "lp_feasible",
    "max_tolerance_1d",
    "merge_partitions",
    "order_key_1d",
    "point_in_hull",
    "random_point_set",
    "render_svg",
    "restricted_growth_strings",
    "select",
    "to_scalar",
    "tolerant_tverberg_1d",
    "tolerant_tverberg_lifted",
    "total_order_1d",
    "tukey_depth",
    "validate_partition",
    "verify_tolerance",
]
