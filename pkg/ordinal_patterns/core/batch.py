"""
Vectorized kernels over all windows of a series.
"""

from typing import Sequence, Tuple, Union
import logging
import numpy as np

from ..exceptions import InputError, LengthError

logger = logging.getLogger('ordinal_patterns.core.batch')

SeriesLike = Union[Sequence[float], np.ndarray]


def as_series(values: SeriesLike) -> np.ndarray:
    """
    Validate a time series and return it as a one-dimensional float64 array.

    The input is never modified.

    Raises:
        InputError: If the series is not one-dimensional or holds NaN/infinity.
    """
    try:
        series = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        error_msg = f"Series must be a sequence of real numbers: {e}"
        logger.error(error_msg)
        raise InputError(error_msg) from e
    if series.ndim != 1:
        error_msg = f"Series must be one-dimensional, got shape {series.shape}."
        logger.error(error_msg)
        raise InputError(error_msg)
    if not np.all(np.isfinite(series)):
        bad = int(np.flatnonzero(~np.isfinite(series))[0])
        error_msg = f"Series contains NaN or infinite value at index {bad}."
        logger.error(error_msg)
        raise InputError(error_msg)
    return series


def window_count(n: int, d: int, lag: int = 1) -> int:
    """Number of windows of length d with spacing lag in a series of n points."""
    return max(n - (d - 1) * lag, 0)


def sliding_windows(series: np.ndarray, d: int, lag: int = 1) -> np.ndarray:
    """
    Read-only view of all windows (x_t, x_{t+lag}, ..., x_{t+(d-1)lag}).

    Args:
        series (np.ndarray): One-dimensional series.
        d (int): Pattern length.
        lag (int): Spacing between consecutive window entries.

    Returns:
        np.ndarray: View of shape (n - (d-1)*lag, d).

    Raises:
        LengthError: If the series is shorter than one window.
    """
    span = (d - 1) * lag + 1
    if series.shape[0] < span:
        error_msg = f"Series of length {series.shape[0]} is shorter than one window (d={d}, lag={lag} needs {span})."
        logger.error(error_msg)
        raise LengthError(error_msg)
    return np.lib.stride_tricks.sliding_window_view(series, span)[:, ::lag]


def pairwise_inversions(windows: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Right inversion counts of every row of a window matrix.

    Every pair (j, k) with j < k is compared once per window; ``>`` adds to
    the count and ``==`` marks the window as tied. Counts of tied windows are
    those of the stable order.

    Args:
        windows (np.ndarray): Matrix of shape (W, d).

    Returns:
        Tuple[np.ndarray, np.ndarray, int]: int64 counts of shape (W, d), a
        boolean tie mask of shape (W,) and the number of comparisons W(d^2-d)/2.
    """
    n_windows, d = windows.shape
    counts = np.zeros((n_windows, d), dtype=np.int64)
    tied = np.zeros(n_windows, dtype=bool)
    for j in range(d - 1):
        column = windows[:, j:j + 1]
        rest = windows[:, j + 1:]
        counts[:, j] = np.count_nonzero(column > rest, axis=1)
        tied |= np.any(column == rest, axis=1)
    return counts, tied, n_windows * (d * d - d) // 2
