"""
Tuple representations of ordinal patterns for tie-free windows.

Three representations of the ordinal pattern of a window x = (x_1, ..., x_d)
are provided, all with increasing order and one-based entries:

- ``PermutationPattern``: indices sorting the window, x[pi_1] < ... < x[pi_d].
- ``RankPattern``: within-window ranks, r_j < r_k iff x_j < x_k (rank 1 is the minimum).
- ``InversionPattern``: right inversion counts i_j = #{k > j : x_j > x_k}.

The conversions between them never need the window itself.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple, Union
import logging

from .window import WindowLike, as_window
from ..exceptions import InvalidPatternError, LengthError, TieError

logger = logging.getLogger('ordinal_patterns.core.patterns')

MAX_ENUMERATION_LENGTH = 9


def _as_int_tuple(values: Sequence[int], kind: str) -> Tuple[int, ...]:
    try:
        result = tuple(int(v) for v in values)
    except (TypeError, ValueError) as e:
        error_msg = f"{kind} entries must be integers: {e}"
        logger.error(error_msg)
        raise InvalidPatternError(error_msg) from e
    if any(r != v for r, v in zip(result, values)):
        error_msg = f"{kind} entries must be integers, got {tuple(values)}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)
    if len(result) < 2:
        error_msg = f"{kind} must have length at least 2, got {len(result)}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)
    return result


def _check_permutation(values: Tuple[int, ...], kind: str) -> None:
    if sorted(values) != list(range(1, len(values) + 1)):
        error_msg = f"{kind} {values} is not a permutation of 1..{len(values)}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)


@dataclass(frozen=True)
class RankPattern:
    """Rank representation r = (r_1, ..., r_d), a permutation of 1..d."""

    ranks: Tuple[int, ...]

    def __post_init__(self) -> None:
        ranks = _as_int_tuple(self.ranks, "RankPattern")
        _check_permutation(ranks, "RankPattern")
        object.__setattr__(self, "ranks", ranks)

    @property
    def d(self) -> int:
        return len(self.ranks)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.ranks

    def to_rank(self) -> "RankPattern":
        return self

    def to_permutation(self) -> "PermutationPattern":
        return permutation_rank_convert(self)

    def to_inversion(self) -> "InversionPattern":
        return rank_to_inversion(self)


@dataclass(frozen=True)
class PermutationPattern:
    """Permutation representation pi = (pi_1, ..., pi_d), a permutation of 1..d."""

    indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        indices = _as_int_tuple(self.indices, "PermutationPattern")
        _check_permutation(indices, "PermutationPattern")
        object.__setattr__(self, "indices", indices)

    @property
    def d(self) -> int:
        return len(self.indices)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.indices

    def to_rank(self) -> RankPattern:
        return permutation_rank_convert(self)

    def to_permutation(self) -> "PermutationPattern":
        return self

    def to_inversion(self) -> "InversionPattern":
        return rank_to_inversion(permutation_rank_convert(self))


@dataclass(frozen=True)
class InversionPattern:
    """
    Inversion representation i = (i_1, ..., i_d) with 0 <= i_j <= d - j.

    The trailing count i_d is always 0 and is stored so that all tuple
    representations have length d.
    """

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        counts = _as_int_tuple(self.counts, "InversionPattern")
        d = len(counts)
        for j, c in enumerate(counts, start=1):
            if not 0 <= c <= d - j:
                error_msg = f"InversionPattern {counts}: count i_{j}={c} outside [0, {d - j}]."
                logger.error(error_msg)
                raise InvalidPatternError(error_msg)
        object.__setattr__(self, "counts", counts)

    @property
    def d(self) -> int:
        return len(self.counts)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.counts

    def to_rank(self) -> RankPattern:
        return permutation_rank_convert(inversion_to_permutation(self))

    def to_permutation(self) -> PermutationPattern:
        return inversion_to_permutation(self)

    def to_inversion(self) -> "InversionPattern":
        return self


TuplePattern = Union[RankPattern, PermutationPattern, InversionPattern]


def _raise_tie(x: List[float], j: int, k: int) -> None:
    error_msg = f"Window {x} has a tie between positions {j + 1} and {k + 1}."
    logger.error(error_msg)
    raise TieError(error_msg)


def rank_pattern_counted(w: WindowLike) -> Tuple[RankPattern, int]:
    """
    Rank representation of a tie-free window plus the number of value comparisons.

    Each rank is obtained by comparing x_j with the d - 1 other entries, so
    d(d - 1) comparisons are made per window.

    Raises:
        TieError: If the window contains equal values.
        LengthError: If the window is shorter than 2.
        InputError: On NaN or infinite values.
    """
    x = as_window(w).tolist()
    d = len(x)
    ranks = [1] * d
    comparisons = 0
    for j in range(d):
        xj = x[j]
        for k in range(d):
            if k == j:
                continue
            comparisons += 1
            if x[k] < xj:
                ranks[j] += 1
            elif x[k] == xj:
                _raise_tie(x, min(j, k), max(j, k))
    return RankPattern(tuple(ranks)), comparisons


def rank_pattern(w: WindowLike) -> RankPattern:
    """
    Rank representation of a tie-free window.

    Example:
        >>> rank_pattern([9, 5, 4, 10, 8]).ranks
        (4, 2, 1, 5, 3)
    """
    pattern, _ = rank_pattern_counted(w)
    return pattern


def permutation_pattern(w: WindowLike) -> PermutationPattern:
    """
    Permutation representation of a tie-free window: the one-based indices
    of the entries sorted from the least to the largest value.

    Example:
        >>> permutation_pattern([9, 5, 4, 10, 8]).indices
        (3, 2, 5, 1, 4)
    """
    x = as_window(w)
    order = sorted(range(x.size), key=x.__getitem__)
    for a, b in zip(order, order[1:]):
        if x[a] == x[b]:
            _raise_tie(x.tolist(), min(a, b), max(a, b))
    return PermutationPattern(tuple(j + 1 for j in order))


def inversion_pattern_counted(w: WindowLike) -> Tuple[InversionPattern, int]:
    """
    Right inversion counts of a tie-free window plus the number of value comparisons.

    Every pair (j, k) with j < k is compared exactly once; the three-way
    comparison both counts the inversion and screens for a tie, so exactly
    (d^2 - d) / 2 comparisons are made for a tie-free window.

    Args:
        w (WindowLike): The window x_1, ..., x_d.

    Returns:
        Tuple[InversionPattern, int]: The pattern and the comparison count.

    Raises:
        TieError: If the window contains equal values.
        LengthError: If the window is shorter than 2.
        InputError: On NaN or infinite values.
    """
    x = as_window(w).tolist()
    d = len(x)
    counts = [0] * d
    comparisons = 0
    for j in range(d - 1):
        xj = x[j]
        for k in range(j + 1, d):
            comparisons += 1
            if xj > x[k]:
                counts[j] += 1
            elif xj == x[k]:
                _raise_tie(x, j, k)
    return InversionPattern(tuple(counts)), comparisons


def inversion_pattern(w: WindowLike) -> InversionPattern:
    """
    Inversion representation of a tie-free window.

    Example:
        >>> inversion_pattern([9, 5, 4, 10, 8]).counts
        (3, 1, 0, 1, 0)
    """
    pattern, _ = inversion_pattern_counted(w)
    return pattern


def permutation_rank_convert(p: Union[PermutationPattern, RankPattern]) -> Union[RankPattern, PermutationPattern]:
    """
    Convert between permutation and rank representation.

    The two are inverse permutations of each other (r_j = sigma^{-1}(j)), so
    the conversion is its own inverse.

    Raises:
        InvalidPatternError: If the input is neither a RankPattern nor a PermutationPattern.
    """
    if isinstance(p, RankPattern):
        values, target = p.ranks, PermutationPattern
    elif isinstance(p, PermutationPattern):
        values, target = p.indices, RankPattern
    else:
        error_msg = f"Expected RankPattern or PermutationPattern, got {type(p).__name__}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)

    inverse = [0] * len(values)
    for position, value in enumerate(values, start=1):
        inverse[value - 1] = position
    return target(tuple(inverse))


def rank_to_inversion(r: RankPattern) -> InversionPattern:
    """
    Right inversion counts from ranks: i_j = #{k > j : r_j > r_k}.
    """
    if not isinstance(r, RankPattern):
        error_msg = f"Expected RankPattern, got {type(r).__name__}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)
    ranks = r.ranks
    d = len(ranks)
    return InversionPattern(tuple(
        sum(1 for k in range(j + 1, d) if ranks[j] > ranks[k]) for j in range(d)
    ))


def inversion_to_permutation(i: InversionPattern) -> PermutationPattern:
    """
    Rebuild the permutation representation from inversion counts by insertion.

    Starting from the one-element permutation (d), step l inserts the index
    d + 1 - l to the left of the first entry if i_{d+1-l} = 0, and otherwise
    right behind the entry at position i_{d+1-l}.

    Example:
        >>> inversion_to_permutation(InversionPattern((1, 1, 0))).indices
        (3, 1, 2)
    """
    if not isinstance(i, InversionPattern):
        error_msg = f"Expected InversionPattern, got {type(i).__name__}."
        logger.error(error_msg)
        raise InvalidPatternError(error_msg)
    d = i.d
    rho = [d]
    for index in range(d - 1, 0, -1):
        rho.insert(i.counts[index - 1], index)
    return PermutationPattern(tuple(rho))


@lru_cache(maxsize=None)
def _all_rank_patterns(d: int) -> Tuple[RankPattern, ...]:
    return tuple(RankPattern(p) for p in permutations(range(1, d + 1)))


def enumerate_patterns(d: int) -> List[RankPattern]:
    """
    All d! rank patterns of length d in lexicographic order.

    Raises:
        LengthError: If d is outside [2, 9].
    """
    if not 2 <= d <= MAX_ENUMERATION_LENGTH:
        error_msg = f"Pattern enumeration needs 2 <= d <= {MAX_ENUMERATION_LENGTH}, got d={d}."
        logger.error(error_msg)
        raise LengthError(error_msg)
    return list(_all_rank_patterns(d))
