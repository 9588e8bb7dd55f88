"""
Tie handling for ordinal patterns.

Windows with equal values are either skipped, randomly perturbed, mapped with
the stable-order convention, or represented by generalized ordinal patterns.
The matching extraction strategies live in ``ordinal_patterns.ties.strategies``.
"""

from .kinds import TieKind, TieStrategy, check_seed
from .resolve import has_ties, stable_rank, stable_permutation, perturb_resolve
from .generalized import (
    MAX_FUBINI_ARGUMENT,
    MAX_GENERALIZED_LENGTH,
    GeneralizedRankPattern,
    GeneralizedPermutationPattern,
    GeneralizedCode,
    generalized_rank,
    generalized_permutation,
    generalized_permutation_from_rank,
    rank_from_generalized_permutation,
    fubini,
    fubini_table,
    enumerate_generalized,
    generalized_code,
    generalized_from_code,
    generalized_codes_batch,
)

__all__ = [
    "TieKind",
    "TieStrategy",
    "check_seed",
    "has_ties",
    "stable_rank",
    "stable_permutation",
    "perturb_resolve",
    "MAX_FUBINI_ARGUMENT",
    "MAX_GENERALIZED_LENGTH",
    "GeneralizedRankPattern",
    "GeneralizedPermutationPattern",
    "GeneralizedCode",
    "generalized_rank",
    "generalized_permutation",
    "generalized_permutation_from_rank",
    "rank_from_generalized_permutation",
    "fubini",
    "fubini_table",
    "enumerate_generalized",
    "generalized_code",
    "generalized_from_code",
    "generalized_codes_batch",
]
