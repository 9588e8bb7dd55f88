"""
Sliding-window extraction of pattern codes from a time series.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple
import logging
import numpy as np

from .sequence import PatternSequence
from ..base.config import ExtractionConfig
from ..base.strategy import BaseTieStrategy, WindowCodes
from ..core import as_series, sliding_windows, window_count
from ..core.batch import SeriesLike
from ..exceptions import ConfigurationError

logger = logging.getLogger('ordinal_patterns.analysis.extraction')


def _check_config(cfg: ExtractionConfig) -> None:
    if not isinstance(cfg, ExtractionConfig):
        error_msg = f"cfg must be an instance of ExtractionConfig, got {type(cfg).__name__} instead."
        logger.error(error_msg)
        raise ConfigurationError(error_msg)


def _encode_range(
    strategy: BaseTieStrategy, series: np.ndarray, cfg: ExtractionConfig, first: int, stop: int
) -> WindowCodes:
    # windows first..stop-1 only need the samples first..stop-1+(d-1)*lag
    chunk = series[first:stop + cfg.span - 1]
    windows = sliding_windows(chunk, cfg.d, cfg.lag)
    return strategy.encode_windows(windows, np.arange(first, stop, dtype=np.int64))


def _chunk_bounds(n_windows: int, chunk_windows: int) -> List[Tuple[int, int]]:
    return [(first, min(first + chunk_windows, n_windows)) for first in range(0, n_windows, chunk_windows)]


def extract_with_counter(series: SeriesLike, cfg: ExtractionConfig) -> Tuple[PatternSequence, int]:
    """
    Pattern codes of every window of a series and the number of value comparisons spent.

    Window t (zero-based) is (x_t, x_{t+lag}, ..., x_{t+(d-1)lag}). Without
    ties the count is W(d^2 - d)/2 for W windows; the perturb strategy adds
    (d^2 - d)/2 per re-resolved tied window.

    Args:
        series (SeriesLike): The time series; it is not modified.
        cfg (ExtractionConfig): Pattern length, lag, tie strategy and scheme.

    Returns:
        Tuple[PatternSequence, int]: The codes and the comparison count.

    Raises:
        LengthError: If the series is shorter than one window.
        InputError: On NaN or infinite values.
    """
    _check_config(cfg)
    x = as_series(series)
    if cfg.chunk_windows is not None:
        return extract_chunked(x, cfg)

    strategy = cfg.create_strategy()
    windows = sliding_windows(x, cfg.d, cfg.lag)
    result = strategy.encode_windows(windows, np.arange(windows.shape[0], dtype=np.int64))
    logger.debug(f"Extracted {windows.shape[0]} windows (d={cfg.d}, lag={cfg.lag}, ties={cfg.ties.value}).")
    sequence = PatternSequence(result.codes, result.present, cfg.d, strategy.scheme)
    return sequence, result.comparisons


def pattern_sequence(series: SeriesLike, cfg: ExtractionConfig) -> PatternSequence:
    """
    Pattern codes of every window of a series.

    Example:
        >>> cfg = ExtractionConfig(d=3)
        >>> pattern_sequence([9, 5, 4, 10, 8], cfg).to_list()
        [5, 2, 1]
    """
    sequence, _ = extract_with_counter(series, cfg)
    return sequence


def extract_chunked(
    series: SeriesLike,
    cfg: ExtractionConfig,
    chunk_windows: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> Tuple[PatternSequence, int]:
    """
    Extraction over consecutive ranges of window starts on a thread pool.

    Chunk k covers the series samples of its windows, so neighbouring chunks
    overlap by (d - 1) * lag samples. Results are merged in window order and
    are identical to a single pass, perturbed ties included, since every tie
    is resolved from the absolute window start.

    Args:
        series (SeriesLike): The time series.
        cfg (ExtractionConfig): The extraction configuration.
        chunk_windows (Optional[int]): Windows per chunk; defaults to cfg.chunk_windows.
        max_workers (Optional[int]): Pool size; defaults to cfg.max_workers.

    Returns:
        Tuple[PatternSequence, int]: The codes and the comparison count.
    """
    _check_config(cfg)
    x = as_series(series)
    chunk_windows = chunk_windows or cfg.chunk_windows
    max_workers = max_workers or cfg.max_workers
    if chunk_windows is None or chunk_windows < 1:
        error_msg = f"chunk_windows must be a positive integer, got {chunk_windows}."
        logger.error(error_msg)
        raise ConfigurationError(error_msg)

    # raises LengthError for a short series
    sliding_windows(x, cfg.d, cfg.lag)
    n_windows = window_count(x.shape[0], cfg.d, cfg.lag)
    strategy = cfg.create_strategy()
    bounds = _chunk_bounds(n_windows, chunk_windows)
    logger.debug(f"Extracting {n_windows} windows in {len(bounds)} chunks with max_workers={max_workers}.")

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        parts = list(pool.map(lambda bound: _encode_range(strategy, x, cfg, *bound), bounds))

    codes = np.concatenate([part.codes for part in parts])
    present = np.concatenate([part.present for part in parts])
    comparisons = sum(part.comparisons for part in parts)
    return PatternSequence(codes, present, cfg.d, strategy.scheme), comparisons
