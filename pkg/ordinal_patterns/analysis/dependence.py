"""
Ordinal pattern dependence between two aligned series.

With n windows present in both series, s of them carrying the same code in
both, and Q = sum_c n_x(c) n_y(c), the standardized coincidence is

    alpha = (s / n - Q / n^2) / (1 - Q / n^2) = (s n - Q) / (n^2 - Q).

The positive side compares the codes directly, the negative side compares the
codes of x with the space-reflected codes of y.
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple
import hashlib
import logging
import numpy as np

from .extraction import pattern_sequence
from ..base.config import ExtractionConfig
from ..core import as_series
from ..core.batch import SeriesLike
from ..exceptions import EmptyDistributionError, LengthMismatchError
from ..inversions import reflect_codes
from ..ties.kinds import TieKind

logger = logging.getLogger('ordinal_patterns.analysis.dependence')


@dataclass(frozen=True)
class OpdReport:
    """
    Attributes:
        d (int): Pattern length.
        alpha_pos (float): Coincidence of equal patterns, in [-1, 1].
        alpha_neg (float): Coincidence of reflected patterns, in [-1, 1].
        signed (float): alpha_pos if alpha_pos >= alpha_neg, else -alpha_neg.
        n_windows (int): Windows present in both series.
        degenerate (bool): Some side had Q = n^2 and was set to 0.
    """
    d: int
    alpha_pos: float
    alpha_neg: float
    signed: float
    n_windows: int
    degenerate: bool = False

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "alpha_pos": self.alpha_pos,
            "alpha_neg": self.alpha_neg,
            "signed": self.signed,
            "n_windows": self.n_windows,
        }


def _coincidence(codes_x: np.ndarray, codes_y: np.ndarray) -> Tuple[float, bool]:
    n = int(codes_x.shape[0])
    same = int(np.count_nonzero(codes_x == codes_y))
    values_x, counts_x = np.unique(codes_x, return_counts=True)
    values_y, counts_y = np.unique(codes_y, return_counts=True)
    _, index_x, index_y = np.intersect1d(values_x, values_y, assume_unique=True, return_indices=True)
    expected = sum(int(a) * int(b) for a, b in zip(counts_x[index_x], counts_y[index_y]))

    denominator = n * n - expected
    if denominator == 0:
        return 0.0, True
    alpha = (same * n - expected) / denominator
    return float(min(1.0, max(-1.0, alpha))), False


def _series_seed(seed: int, series: np.ndarray) -> int:
    digest = hashlib.blake2b(seed.to_bytes(8, "little"), digest_size=8)
    digest.update(np.ascontiguousarray(series, dtype="<f8").tobytes())
    return int.from_bytes(digest.digest(), "little")


def opd(x: SeriesLike, y: SeriesLike, cfg: ExtractionConfig) -> OpdReport:
    """
    Ordinal pattern dependence of two series of equal length.

    Windows absent in either series (skip strategy) are left out of every
    estimate. Under the perturb strategy each series breaks its ties with a
    seed derived from cfg.seed and its own values, so the result does not
    depend on the argument order and identical series resolve identically.

    Args:
        x (SeriesLike): First series.
        y (SeriesLike): Second series.
        cfg (ExtractionConfig): The extraction configuration.

    Returns:
        OpdReport: Both one-sided coefficients and the signed value.

    Raises:
        LengthMismatchError: If the series differ in length.
        LengthError: If the series are shorter than one window.
        EmptyDistributionError: If no window is present in both series.
    """
    xs, ys = as_series(x), as_series(y)
    if xs.shape[0] != ys.shape[0]:
        error_msg = f"Series lengths differ: {xs.shape[0]} != {ys.shape[0]}."
        logger.error(error_msg)
        raise LengthMismatchError(error_msg)

    cfg_x = cfg_y = cfg
    if cfg.strategy.kind is TieKind.PERTURB:
        cfg_x = cfg.copy(seed=_series_seed(cfg.seed, xs))
        cfg_y = cfg.copy(seed=_series_seed(cfg.seed, ys))
    seq_x = pattern_sequence(xs, cfg_x)
    seq_y = pattern_sequence(ys, cfg_y)

    both = seq_x.present & seq_y.present
    n_windows = int(np.count_nonzero(both))
    if n_windows == 0:
        error_msg = "No window is present in both series."
        logger.error(error_msg)
        raise EmptyDistributionError(error_msg)

    codes_x, codes_y = seq_x.codes[both], seq_y.codes[both]
    alpha_pos, degenerate_pos = _coincidence(codes_x, codes_y)
    alpha_neg, degenerate_neg = _coincidence(codes_x, reflect_codes(codes_y, cfg.d, seq_y.scheme))
    degenerate = degenerate_pos or degenerate_neg
    if degenerate:
        logger.warning("OPD is degenerate (a single pattern in both series); the affected coefficient is set to 0.")

    signed = alpha_pos if alpha_pos >= alpha_neg else -alpha_neg
    logger.debug(f"OPD over {n_windows} windows: alpha_pos={alpha_pos:.6f}, alpha_neg={alpha_neg:.6f}.")
    return OpdReport(cfg.d, alpha_pos, alpha_neg, signed, n_windows, degenerate)
