"""
Core ordinal pattern representations.

This module defines the rank, permutation and inversion representations of
ordinal patterns of tie-free windows and all conversions among them.
"""

from .window import as_window, has_equal_values
from .batch import as_series, window_count, sliding_windows, pairwise_inversions
from .patterns import (
    MAX_ENUMERATION_LENGTH,
    RankPattern,
    PermutationPattern,
    InversionPattern,
    TuplePattern,
    rank_pattern,
    rank_pattern_counted,
    permutation_pattern,
    inversion_pattern,
    inversion_pattern_counted,
    permutation_rank_convert,
    rank_to_inversion,
    inversion_to_permutation,
    enumerate_patterns,
)

__all__ = [
    "MAX_ENUMERATION_LENGTH",
    "RankPattern",
    "PermutationPattern",
    "InversionPattern",
    "TuplePattern",
    "as_window",
    "has_equal_values",
    "as_series",
    "window_count",
    "sliding_windows",
    "pairwise_inversions",
    "rank_pattern",
    "rank_pattern_counted",
    "permutation_pattern",
    "inversion_pattern",
    "inversion_pattern_counted",
    "permutation_rank_convert",
    "rank_to_inversion",
    "inversion_to_permutation",
    "enumerate_patterns",
]
