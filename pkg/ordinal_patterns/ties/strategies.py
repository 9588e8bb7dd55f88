"""
Tie strategies that turn a matrix of windows into pattern codes.

Every strategy computes the right inversion counts of all windows with one
three-way comparison per pair of entries and differs only in what happens to
windows with equal values.
"""

import logging
import numpy as np

from ..base.strategy import BaseTieStrategy, WindowCodes
from ..core import pairwise_inversions
from ..exceptions import LengthError
from .generalized import MAX_GENERALIZED_LENGTH, generalized_codes_batch
from .resolve import perturb_resolve

logger = logging.getLogger('ordinal_patterns.ties.strategies')


class StableTieStrategy(BaseTieStrategy):
    """
    Tied entries are ordered by their position: the earlier entry is the smaller one.
    """

    def encode_windows(self, windows: np.ndarray, starts: np.ndarray) -> WindowCodes:
        counts, _, comparisons = pairwise_inversions(windows)
        codes = counts @ self.weights
        return WindowCodes(codes, np.ones(len(codes), dtype=bool), comparisons)


class SkipTieStrategy(BaseTieStrategy):
    """
    Windows with equal values produce no pattern.
    """

    def encode_windows(self, windows: np.ndarray, starts: np.ndarray) -> WindowCodes:
        counts, tied, comparisons = pairwise_inversions(windows)
        codes = counts @ self.weights
        codes[tied] = 0
        if tied.any():
            logger.debug(f"Skipped {int(tied.sum())} of {len(codes)} windows with ties.")
        return WindowCodes(codes, ~tied, comparisons)


class PerturbTieStrategy(BaseTieStrategy):
    """
    Ties are broken by a seeded random order, drawn per window from (seed, window start).
    """

    def __init__(self, config) -> None:
        super().__init__(config)
        self.seed: int = config.strategy.seed

    def encode_windows(self, windows: np.ndarray, starts: np.ndarray) -> WindowCodes:
        counts, tied, comparisons = pairwise_inversions(windows)
        tied_rows = np.flatnonzero(tied)
        if tied_rows.size:
            resolved = np.vstack([
                perturb_resolve(windows[row], self.seed, int(starts[row])) for row in tied_rows
            ])
            resolved_counts, _, extra = pairwise_inversions(resolved)
            counts[tied_rows] = resolved_counts
            comparisons += extra
            logger.debug(f"Perturbed {tied_rows.size} of {len(counts)} windows with ties.")
        codes = counts @ self.weights
        return WindowCodes(codes, np.ones(len(codes), dtype=bool), comparisons)


class GeneralizedTieStrategy(BaseTieStrategy):
    """
    Every window is mapped to its generalized ordinal pattern; codes index the
    lexicographic list of generalized patterns of length d.
    """

    generalized = True

    def __init__(self, config) -> None:
        super().__init__(config)
        if self.d > MAX_GENERALIZED_LENGTH:
            error_msg = f"The generalized tie strategy supports d <= {MAX_GENERALIZED_LENGTH}, got d={self.d}."
            logger.error(error_msg)
            raise LengthError(error_msg)

    def encode_windows(self, windows: np.ndarray, starts: np.ndarray) -> WindowCodes:
        codes, comparisons = generalized_codes_batch(windows)
        return WindowCodes(codes, np.ones(len(codes), dtype=bool), comparisons)
