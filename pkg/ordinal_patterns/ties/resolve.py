"""
Tie-resolving maps from windows with equal values to ordinary patterns.

``stable_rank`` keeps the increasing order of tied entries (the earlier
entry gets the lower rank). ``perturb_resolve`` orders every group of tied
entries by a seeded uniformly random permutation instead.
"""

import logging
import numpy as np

from .kinds import check_seed
from ..core import PermutationPattern, RankPattern, as_window, has_equal_values
from ..core.window import WindowLike
from ..exceptions import InputError

logger = logging.getLogger('ordinal_patterns.ties.resolve')


def has_ties(w: WindowLike) -> bool:
    """
    Return True iff some pair of entries of the window is exactly equal.

    Raises:
        InputError: On NaN or infinite values.
    """
    return has_equal_values(as_window(w))


def stable_permutation(w: WindowLike) -> PermutationPattern:
    """
    Permutation representation with ties kept in increasing index order:
    x[pi_1] <= ... <= x[pi_d] and pi_{j-1} < pi_j whenever the values are equal.
    """
    window = as_window(w)
    order = np.argsort(window, kind="stable")
    return PermutationPattern(tuple(int(j) + 1 for j in order))


def stable_rank(w: WindowLike) -> RankPattern:
    """
    Rank representation with r_j < r_k iff x_j < x_k or (x_j = x_k and j < k).

    Example:
        >>> stable_rank([5, 3, 5]).ranks
        (2, 1, 3)
    """
    return stable_permutation(w).to_rank()


def perturb_resolve(w: WindowLike, seed: int, start: int = 0) -> np.ndarray:
    """
    Break the ties of a window at random.

    The result is a tie-free window whose strict order extends the order of
    ``w``: strictly ordered pairs keep their order, while the entries of every
    tied group are ordered by a uniformly random permutation drawn from a
    generator seeded by ``(seed, start)``. Tie-free windows are returned as a
    copy; otherwise the returned entries are the resolved ranks 1..d.

    Args:
        w (WindowLike): The window.
        seed (int): Unsigned 64-bit seed.
        start (int): Zero-based start index of the window in its series.

    Returns:
        np.ndarray: A tie-free float64 window.

    Raises:
        InputError: On NaN or infinite values or a negative start index.
        ConfigurationError: If the seed is not an unsigned 64-bit integer.
    """
    window = as_window(w)
    seed = check_seed(seed)
    if start < 0:
        error_msg = f"Window start index must be non-negative, got {start}."
        logger.error(error_msg)
        raise InputError(error_msg)
    if not has_equal_values(window):
        return window.copy()

    rng = np.random.default_rng([seed, int(start)])
    tiebreak = rng.permutation(window.size)
    # lexsort: last key is primary
    order = np.lexsort((tiebreak, window))
    resolved = np.empty(window.size, dtype=np.float64)
    resolved[order] = np.arange(1, window.size + 1, dtype=np.float64)
    logger.debug(f"Resolved ties of window starting at {start} to {resolved.tolist()}.")
    return resolved
