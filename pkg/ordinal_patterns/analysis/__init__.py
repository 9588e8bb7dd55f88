"""
Time-series analysis with ordinal patterns.

Sliding-window extraction, empirical pattern distributions, entropy and
ordinal pattern dependence.
"""

from .sequence import PatternSequence
from .extraction import pattern_sequence, extract_with_counter, extract_chunked
from .distribution import PatternDistribution, pattern_distribution, pattern_entropy
from .dependence import OpdReport, opd

__all__ = [
    "PatternSequence",
    "pattern_sequence",
    "extract_with_counter",
    "extract_chunked",
    "PatternDistribution",
    "pattern_distribution",
    "pattern_entropy",
    "OpdReport",
    "opd",
]
