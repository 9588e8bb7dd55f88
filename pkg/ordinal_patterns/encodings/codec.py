from dataclasses import dataclass
from typing import List
import logging

from .schemes import EncodingScheme, PatternCode, pattern_weights
from ..core import (
    InversionPattern,
    RankPattern,
    enumerate_patterns,
    rank_to_inversion,
)
from ..exceptions import InvalidPatternError

logger = logging.getLogger('ordinal_patterns.encodings.codec')


@dataclass(frozen=True)
class CodeTableRow:
    """One row of the numerical encoding table."""

    rank: RankPattern
    inversion: InversionPattern
    kse: int
    lehmer: int


def encode(i: InversionPattern, scheme: EncodingScheme = EncodingScheme.LEHMER) -> PatternCode:
    """
    Number representation of an inversion pattern.

    Args:
        i (InversionPattern): Right inversion counts.
        scheme (EncodingScheme): KSE or LEHMER (default).

    Returns:
        PatternCode: The code, in [0, d! - 1].

    Raises:
        EncodingOverflowError: If d > 20.

    Example:
        >>> encode(InversionPattern((0, 1, 0)), EncodingScheme.KSE).value
        3
    """
    if not isinstance(i, InversionPattern):
        error_msg = f"Expected InversionPattern, got {type(i).__name__}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)
    weights = pattern_weights(i.d, EncodingScheme.parse(scheme))
    value = sum(c * w for c, w in zip(i.counts, weights))
    return PatternCode(i.d, scheme, value)


def decode(c: PatternCode) -> InversionPattern:
    """
    Inverse of ``encode``: mixed-radix digit extraction.

    Digit j has radix d - j + 1 and place value w_j, so for LEHMER the most
    significant digit comes first and for KSE the least significant one.
    """
    weights = pattern_weights(c.d, c.scheme)
    return InversionPattern(tuple(
        (c.value // w) % (c.d - j + 1) for j, w in enumerate(weights, start=1)
    ))


def encode_rank(r: RankPattern, scheme: EncodingScheme = EncodingScheme.LEHMER) -> PatternCode:
    """Encode a rank pattern through its inversion counts."""
    return encode(rank_to_inversion(r), scheme)


def decode_rank(c: PatternCode) -> RankPattern:
    """Decode a pattern code straight to its rank representation."""
    return decode(c).to_rank()


def code_table(d: int) -> List[CodeTableRow]:
    """
    Rank, inversion, KSE and LEHMER representation of every pattern of length d,
    ordered lexicographically by rank tuple.

    Raises:
        LengthError: If d is outside [2, 9].
    """
    rows = []
    for rank in enumerate_patterns(d):
        inversion = rank_to_inversion(rank)
        rows.append(CodeTableRow(
            rank=rank,
            inversion=inversion,
            kse=encode(inversion, EncodingScheme.KSE).value,
            lehmer=encode(inversion, EncodingScheme.LEHMER).value,
        ))
    logger.debug(f"Built code table for d={d} with {len(rows)} rows.")
    return rows
