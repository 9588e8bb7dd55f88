"""
Ordinal Patterns Package

This package provides rank, permutation and inversion representations of
ordinal patterns, their KSE and Lehmer-code numbering, space and time
inversions, tie handling including generalized patterns, and time-series
analysis (pattern distributions, entropy and ordinal pattern dependence).
"""

from .logging_config import setup_logging
from .registry import TieStrategyRegistry
from .default_strategies import register_default_strategies
from .base import ExtractionConfig
from .extractor import PatternExtractor
from .core import (
    RankPattern,
    PermutationPattern,
    InversionPattern,
    rank_pattern,
    permutation_pattern,
    inversion_pattern,
    permutation_rank_convert,
    rank_to_inversion,
    inversion_to_permutation,
    enumerate_patterns,
)
from .encodings import EncodingScheme, PatternCode, encode, decode, code_table
from .inversions import invert_space, invert_time, reflect_code
from .ties import (
    TieKind,
    TieStrategy,
    GeneralizedRankPattern,
    GeneralizedPermutationPattern,
    has_ties,
    stable_rank,
    perturb_resolve,
    generalized_rank,
    generalized_permutation,
    fubini,
    enumerate_generalized,
)
from .analysis import (
    PatternSequence,
    PatternDistribution,
    OpdReport,
    pattern_sequence,
    pattern_distribution,
    pattern_entropy,
    opd,
    extract_with_counter,
)

# Set up logging
logger = setup_logging()
logger.debug("Initializing Ordinal Patterns Package")

# Automatically register default tie strategies
try:
    register_default_strategies()
    logger.debug("Default tie strategies registered successfully.")
except Exception as e:
    logger.exception("Failed to register default tie strategies.")
    raise RuntimeError("Failed to register default tie strategies.") from e

__all__ = [
    "TieStrategyRegistry",
    "ExtractionConfig",
    "PatternExtractor",
    "RankPattern",
    "PermutationPattern",
    "InversionPattern",
    "rank_pattern",
    "permutation_pattern",
    "inversion_pattern",
    "permutation_rank_convert",
    "rank_to_inversion",
    "inversion_to_permutation",
    "enumerate_patterns",
    "EncodingScheme",
    "PatternCode",
    "encode",
    "decode",
    "code_table",
    "invert_space",
    "invert_time",
    "reflect_code",
    "TieKind",
    "TieStrategy",
    "GeneralizedRankPattern",
    "GeneralizedPermutationPattern",
    "has_ties",
    "stable_rank",
    "perturb_resolve",
    "generalized_rank",
    "generalized_permutation",
    "fubini",
    "enumerate_generalized",
    "PatternSequence",
    "PatternDistribution",
    "OpdReport",
    "pattern_sequence",
    "pattern_distribution",
    "pattern_entropy",
    "opd",
    "extract_with_counter",
]
