"""Merging and cutting strings of positive numbers.

Two problems on a sequence of positive numbers: merge as few adjacent pairs
as possible until every number reaches a threshold b, and merge exactly k
adjacent pairs so the smallest resulting number is as large as possible.
Solvers: a greedy linear scan, a dynamic program over prefix-sum points, a
binary search on the answer for integer inputs, and a bounded search tree
parameterized by k, plus exhaustive oracles for cross-checking.
"""

from .core import (
    CutValue,
    DuplicatePoints,
    EmptyString,
    Infeasible,
    InvalidPartition,
    InvalidPlan,
    KOutOfRange,
    MergeCutError,
    MergePlan,
    NonIntegerInput,
    NonPositiveValue,
    NumString,
    Partition,
    PointSet,
    QOutOfRange,
    TooFewPoints,
    TooLarge,
    TooShort,
    apply_merges,
    format_number,
    merges_to_partition,
    partition_to_merges,
    piece_sums,
    to_points,
    validate_string,
)
from .fpt import ReducedInstance, maxmin_merge_fpt, reduce_instance
from .greedy import (
    BPartitionResult,
    fewest_merges,
    maxmin_merge_by_search,
    minimal_b_prefix,
    optimal_b_partition,
)
from .kcut_dp import (
    DpTables,
    cut2_linear,
    cut3_linear,
    cut_string_dp,
    diversity_dp,
    fill_tables,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    gen_instance,
    oracle_diversity,
    oracle_max_b_partition,
    oracle_maxmin_cut,
)

__version__ = "0.1.0"

__all__ = [
    "CutValue",
    "NumString",
    "Partition",
    "MergePlan",
    "PointSet",
    "MergeCutError",
    "EmptyString",
    "NonPositiveValue",
    "InvalidPartition",
    "InvalidPlan",
    "Infeasible",
    "NonIntegerInput",
    "KOutOfRange",
    "QOutOfRange",
    "TooFewPoints",
    "DuplicatePoints",
    "TooShort",
    "TooLarge",
    "validate_string",
    "to_points",
    "piece_sums",
    "partition_to_merges",
    "merges_to_partition",
    "apply_merges",
    "format_number",
    "BPartitionResult",
    "minimal_b_prefix",
    "optimal_b_partition",
    "fewest_merges",
    "maxmin_merge_by_search",
    "DpTables",
    "fill_tables",
    "diversity_dp",
    "cut_string_dp",
    "cut2_linear",
    "cut3_linear",
    "ReducedInstance",
    "reduce_instance",
    "maxmin_merge_fpt",
    "OracleBudget",
    "DEFAULT_BUDGET",
    "oracle_max_b_partition",
    "oracle_maxmin_cut",
    "oracle_diversity",
    "gen_instance",
    "__version__",
]
