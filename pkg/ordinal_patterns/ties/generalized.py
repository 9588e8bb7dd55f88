"""
Generalized ordinal patterns, which let tied entries share a rank.

The generalized rank representation of a window with m distinct values
y_1 < ... < y_m is psi with psi_j = k iff x_j = y_k. Its permutation
counterpart lists the preimages of 1, ..., m as index sets. There are
Fubini(d) generalized patterns of length d (ordered set partitions of 1..d).
"""

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import FrozenSet, Iterator, List, Sequence, Tuple
import logging
import numpy as np

from ..core import as_window
from ..core.window import WindowLike
from ..exceptions import CodeRangeError, InvalidPatternError, LengthError

logger = logging.getLogger('ordinal_patterns.ties.generalized')

MAX_FUBINI_ARGUMENT = 15
MAX_GENERALIZED_LENGTH = 7


@dataclass(frozen=True)
class GeneralizedRankPattern:
    """Generalized rank representation psi, a surjection onto 1..m."""

    psi: Tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            psi = tuple(int(v) for v in self.psi)
        except (TypeError, ValueError) as e:
            error_msg = f"GeneralizedRankPattern entries must be integers: {e}"
            logger.error(error_msg)
            raise InvalidPatternError(error_msg) from e
        if len(psi) < 2:
            error_msg = f"GeneralizedRankPattern must have length at least 2, got {len(psi)}."
            logger.error(error_msg)
            raise InvalidPatternError(error_msg)
        if set(psi) != set(range(1, max(psi) + 1)) or min(psi) < 1:
            error_msg = f"GeneralizedRankPattern {psi} does not attain every value in 1..{max(psi)}."
            logger.error(error_msg)
            raise InvalidPatternError(error_msg)
        object.__setattr__(self, "psi", psi)

    @property
    def d(self) -> int:
        return len(self.psi)

    @property
    def m(self) -> int:
        return max(self.psi)

    def as_tuple(self) -> Tuple[int, ...]:
        return self.psi


@dataclass(frozen=True)
class GeneralizedPermutationPattern:
    """Generalized permutation representation: the index sets of the 1st, ..., m-th smallest value."""

    groups: Tuple[FrozenSet[int], ...]

    def __post_init__(self) -> None:
        groups = tuple(frozenset(int(j) for j in g) for g in self.groups)
        indices = [j for g in groups for j in g]
        if any(not g for g in groups):
            error_msg = "GeneralizedPermutationPattern groups must be non-empty."
            logger.error(error_msg)
            raise InvalidPatternError(error_msg)
        if sorted(indices) != list(range(1, len(indices) + 1)) or len(indices) < 2:
            error_msg = f"GeneralizedPermutationPattern groups {groups} do not partition 1..d with d >= 2."
            logger.error(error_msg)
            raise InvalidPatternError(error_msg)
        object.__setattr__(self, "groups", groups)

    @property
    def d(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def m(self) -> int:
        return len(self.groups)

    def as_tuple(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(g)) for g in self.groups)


def _check_generalized_length(d: int) -> None:
    if not 2 <= d <= MAX_GENERALIZED_LENGTH:
        error_msg = f"Generalized patterns are enumerated for 2 <= d <= {MAX_GENERALIZED_LENGTH}, got d={d}."
        logger.error(error_msg)
        raise LengthError(error_msg)


@dataclass(frozen=True)
class GeneralizedCode:
    """Index of a generalized pattern in the lexicographic list of all patterns of length d."""

    d: int
    value: int

    def __post_init__(self) -> None:
        _check_generalized_length(self.d)
        value = int(self.value)
        if not 0 <= value < fubini(self.d):
            error_msg = f"Generalized code {value} outside [0, {fubini(self.d) - 1}] for d={self.d}."
            logger.error(error_msg)
            raise CodeRangeError(error_msg)
        object.__setattr__(self, "value", value)

    def __int__(self) -> int:
        return self.value


def generalized_rank(w: WindowLike) -> GeneralizedRankPattern:
    """
    Generalized rank representation of a window; ties share a rank.

    Example:
        >>> generalized_rank([1, 1, 4, 3]).psi
        (1, 1, 3, 2)
    """
    window = as_window(w)
    distinct = np.unique(window)
    return GeneralizedRankPattern(tuple(int(k) + 1 for k in np.searchsorted(distinct, window)))


def generalized_permutation_from_rank(psi: GeneralizedRankPattern) -> GeneralizedPermutationPattern:
    """Group positions by their generalized rank."""
    return GeneralizedPermutationPattern(tuple(
        frozenset(j for j, v in enumerate(psi.psi, start=1) if v == level)
        for level in range(1, psi.m + 1)
    ))


def rank_from_generalized_permutation(groups: GeneralizedPermutationPattern) -> GeneralizedRankPattern:
    """Inverse of ``generalized_permutation_from_rank``."""
    psi = [0] * groups.d
    for level, group in enumerate(groups.groups, start=1):
        for j in group:
            psi[j - 1] = level
    return GeneralizedRankPattern(tuple(psi))


def generalized_permutation(w: WindowLike) -> GeneralizedPermutationPattern:
    """
    Generalized permutation representation of a window.

    Example:
        >>> generalized_permutation([4, 4, 6]).as_tuple()
        ((1, 2), (3,))
    """
    return generalized_permutation_from_rank(generalized_rank(w))


_fubini_numbers: List[int] = [1]


def fubini(d: int) -> int:
    """
    Number of ordered set partitions of 1..d, i.e. of generalized patterns of length d.

    a(0) = 1, a(n) = sum_{k=1..n} C(n, k) a(n - k).

    Raises:
        CodeRangeError: If d is outside [0, 15].
    """
    if not 0 <= d <= MAX_FUBINI_ARGUMENT:
        error_msg = f"fubini(d) is provided for 0 <= d <= {MAX_FUBINI_ARGUMENT}, got d={d}."
        logger.error(error_msg)
        raise CodeRangeError(error_msg)
    while len(_fubini_numbers) <= d:
        n = len(_fubini_numbers)
        _fubini_numbers.append(sum(comb(n, k) * _fubini_numbers[n - k] for k in range(1, n + 1)))
    return _fubini_numbers[d]


def fubini_table(d: int) -> List[int]:
    """The Fubini numbers a(0), ..., a(d)."""
    fubini(d)
    return list(_fubini_numbers[:d + 1])


def _ordered_set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    rest, last = items[:-1], items[-1]
    for smaller in _ordered_set_partitions(rest):
        for i, block in enumerate(smaller):
            yield smaller[:i] + [block + [last]] + smaller[i + 1:]
        for i in range(len(smaller) + 1):
            yield smaller[:i] + [[last]] + smaller[i:]


@lru_cache(maxsize=None)
def _generalized_table(d: int) -> Tuple[Tuple[int, ...], ...]:
    table = []
    for partition in _ordered_set_partitions(list(range(1, d + 1))):
        psi = [0] * d
        for level, block in enumerate(partition, start=1):
            for j in block:
                psi[j - 1] = level
        table.append(tuple(psi))
    table.sort()
    logger.debug(f"Enumerated {len(table)} generalized patterns of length {d}.")
    return tuple(table)


@lru_cache(maxsize=None)
def _generalized_keys(d: int) -> np.ndarray:
    # psi read as base-d digits; numeric order equals lexicographic order
    powers = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
    keys = (np.array(_generalized_table(d), dtype=np.int64) - 1) @ powers
    keys.setflags(write=False)
    return keys


def enumerate_generalized(d: int) -> List[GeneralizedRankPattern]:
    """
    All generalized patterns of length d, in lexicographic order of psi.

    Raises:
        LengthError: If d is outside [2, 7].
    """
    _check_generalized_length(d)
    return [GeneralizedRankPattern(psi) for psi in _generalized_table(d)]


def generalized_code(psi: GeneralizedRankPattern) -> GeneralizedCode:
    """Position of a generalized pattern in ``enumerate_generalized(psi.d)``."""
    _check_generalized_length(psi.d)
    table = _generalized_table(psi.d)
    index = bisect_left(table, psi.psi)
    return GeneralizedCode(psi.d, index)


def generalized_from_code(code: GeneralizedCode) -> GeneralizedRankPattern:
    """Inverse of ``generalized_code``."""
    return GeneralizedRankPattern(_generalized_table(code.d)[code.value])


def generalized_codes_batch(windows: np.ndarray) -> Tuple[np.ndarray, int]:
    """
    Generalized codes of every row of a window matrix.

    Each pair (j, k), j < k, is compared once (three-way). psi_j is one plus
    the number of first occurrences of values below x_j.

    Args:
        windows (np.ndarray): Matrix of shape (W, d).

    Returns:
        Tuple[np.ndarray, int]: Codes (int64, shape (W,)) and the number of comparisons.
    """
    n_windows, d = windows.shape
    _check_generalized_length(d)

    greater = {}
    equal = {}
    first = np.ones((n_windows, d), dtype=bool)
    for j in range(d - 1):
        for k in range(j + 1, d):
            greater[j, k] = windows[:, j] > windows[:, k]
            equal[j, k] = windows[:, j] == windows[:, k]
            first[:, k] &= ~equal[j, k]

    psi = np.ones((n_windows, d), dtype=np.int64)
    for (j, k), gt in greater.items():
        lt = ~(gt | equal[j, k])
        psi[:, j] += gt & first[:, k]
        psi[:, k] += lt & first[:, j]

    powers = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
    keys = (psi - 1) @ powers
    codes = np.searchsorted(_generalized_keys(d), keys).astype(np.int64)
    return codes, n_windows * (d * d - d) // 2
