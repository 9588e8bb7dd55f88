"""
Space and time inversion of ordinal patterns.

Space inversion is the pattern of the negated window (reflection on a
horizontal line); time inversion is the pattern of the reversed window.
Rank tuples follow the transformation of the window, permutation tuples the
opposite one:

    r^s_j = d + 1 - r_j        pi^s = (pi_d, ..., pi_1)
    r^t   = (r_d, ..., r_1)    pi^t_j = d + 1 - pi_j

Right inversion counts invert in space by i^s_j = d - j - i_j. Inverted in
time they become the left non-inversion counts of the original pattern, which
are not a function of the i_j alone, so that path goes through the ranks.
"""

from functools import singledispatch
from math import factorial
from typing import Optional, Tuple
import logging
import numpy as np

from ..core import InversionPattern, PermutationPattern, RankPattern, rank_to_inversion
from ..encodings import EncodingScheme, PatternCode, decode, encode
from ..exceptions import InvalidPatternError
from ..ties import (
    GeneralizedCode,
    GeneralizedPermutationPattern,
    GeneralizedRankPattern,
    generalized_code,
    generalized_from_code,
)

logger = logging.getLogger('ordinal_patterns.inversions.transform')


def _unsupported(p, operation: str):
    error_msg = f"{operation} is not defined for {type(p).__name__}."
    logger.error(error_msg)
    raise InvalidPatternError(error_msg)


@singledispatch
def invert_space(p):
    """
    Pattern of the negated window, in the representation of ``p``.

    Example:
        >>> invert_space(RankPattern((4, 2, 1, 5, 3))).ranks
        (2, 4, 5, 1, 3)
    """
    _unsupported(p, "Space inversion")


@invert_space.register(RankPattern)
def _(p: RankPattern) -> RankPattern:
    return RankPattern(tuple(p.d + 1 - r for r in p.ranks))


@invert_space.register(PermutationPattern)
def _(p: PermutationPattern) -> PermutationPattern:
    return PermutationPattern(p.indices[::-1])


@invert_space.register(InversionPattern)
def _(p: InversionPattern) -> InversionPattern:
    return InversionPattern(tuple(p.d - j - i for j, i in enumerate(p.counts, start=1)))


@invert_space.register(GeneralizedRankPattern)
def _(p: GeneralizedRankPattern) -> GeneralizedRankPattern:
    return GeneralizedRankPattern(tuple(p.m + 1 - v for v in p.psi))


@invert_space.register(GeneralizedPermutationPattern)
def _(p: GeneralizedPermutationPattern) -> GeneralizedPermutationPattern:
    return GeneralizedPermutationPattern(p.groups[::-1])


@singledispatch
def invert_time(p):
    """
    Pattern of the reversed window, in the representation of ``p``.

    Example:
        >>> invert_time(PermutationPattern((3, 2, 5, 1, 4))).indices
        (3, 4, 1, 5, 2)
    """
    _unsupported(p, "Time inversion")


@invert_time.register(RankPattern)
def _(p: RankPattern) -> RankPattern:
    return RankPattern(p.ranks[::-1])


@invert_time.register(PermutationPattern)
def _(p: PermutationPattern) -> PermutationPattern:
    return PermutationPattern(tuple(p.d + 1 - j for j in p.indices))


@invert_time.register(InversionPattern)
def _(p: InversionPattern) -> InversionPattern:
    return rank_to_inversion(invert_time(p.to_rank()))


@invert_time.register(GeneralizedRankPattern)
def _(p: GeneralizedRankPattern) -> GeneralizedRankPattern:
    return GeneralizedRankPattern(p.psi[::-1])


@invert_time.register(GeneralizedPermutationPattern)
def _(p: GeneralizedPermutationPattern) -> GeneralizedPermutationPattern:
    d = p.d
    return GeneralizedPermutationPattern(tuple(frozenset(d + 1 - j for j in g) for g in p.groups))


def left_non_inversion_counts(r: RankPattern) -> Tuple[int, ...]:
    """
    For every position j, the number of earlier positions l < j with r_l < r_j.

    Read from right to left these are the right inversion counts of the
    time-inverted pattern.
    """
    return tuple(
        sum(1 for l in range(j) if r.ranks[l] < r.ranks[j]) for j in range(r.d)
    )


def reflect_code(c: PatternCode) -> PatternCode:
    """
    Code of the space-inverted pattern, under the same scheme.

    For LEHMER, a code and its reflection always add up to d! - 1.
    """
    return encode(invert_space(decode(c)), c.scheme)


def reflect_generalized_code(c: GeneralizedCode) -> GeneralizedCode:
    """Generalized code of the space-inverted generalized pattern."""
    return generalized_code(invert_space(generalized_from_code(c)))


def reflect_codes(codes: np.ndarray, d: int, scheme: Optional[EncodingScheme]) -> np.ndarray:
    """
    Reflect a whole array of codes; ``scheme=None`` means generalized codes.

    Args:
        codes (np.ndarray): int64 codes.
        d (int): Pattern length.
        scheme (Optional[EncodingScheme]): Scheme of the codes.

    Returns:
        np.ndarray: Codes of the space-inverted patterns.
    """
    codes = np.asarray(codes, dtype=np.int64)
    if scheme is not None and EncodingScheme.parse(scheme) is EncodingScheme.LEHMER:
        return (factorial(d) - 1) - codes

    unique, inverse = np.unique(codes, return_inverse=True)
    if scheme is None:
        reflected = [reflect_generalized_code(GeneralizedCode(d, int(v))).value for v in unique]
    else:
        reflected = [reflect_code(PatternCode(d, scheme, int(v))).value for v in unique]
    return np.asarray(reflected, dtype=np.int64)[inverse.reshape(-1)]
