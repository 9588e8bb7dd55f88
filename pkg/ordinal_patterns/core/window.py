from typing import Sequence, Union
import numpy as np
import logging
from ..exceptions import InputError, LengthError

logger = logging.getLogger('ordinal_patterns.core.window')

WindowLike = Union[Sequence[float], np.ndarray]


def as_window(values: WindowLike) -> np.ndarray:
    """
    Validate a window and return it as a float64 array.

    Args:
        values (WindowLike): Ordered window entries x_1, ..., x_d.

    Returns:
        np.ndarray: One-dimensional float64 copy of the window.

    Raises:
        InputError: If the window is not one-dimensional, not numeric, or holds NaN/infinity.
        LengthError: If the window has fewer than two entries.
    """
    try:
        window = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        error_msg = f"Window must be a sequence of real numbers: {e}"
        logger.error(error_msg)
        raise InputError(error_msg) from e

    if window.ndim != 1:
        error_msg = f"Window must be one-dimensional, got shape {window.shape}."
        logger.error(error_msg)
        raise InputError(error_msg)
    if window.size < 2:
        error_msg = f"Window length must be at least 2, got {window.size}."
        logger.error(error_msg)
        raise LengthError(error_msg)
    if not np.all(np.isfinite(window)):
        error_msg = "Window contains NaN or infinite values."
        logger.error(error_msg)
        raise InputError(error_msg)
    return window


def has_equal_values(window: np.ndarray) -> bool:
    """Return True if two entries of a validated window are exactly equal."""
    return np.unique(window).size != window.size
