from typing import Any, Tuple
from .base.config import ExtractionConfig
from .analysis import (
    OpdReport,
    PatternDistribution,
    PatternSequence,
    extract_chunked,
    extract_with_counter,
    opd,
    pattern_distribution,
)
from .core.batch import SeriesLike
from .exceptions import ExtractionError, OrdinalPatternError
import logging

# Initialize logger for this module
logger = logging.getLogger('ordinal_patterns.extractor')


class PatternExtractor:
    """
    Runs pattern extraction, distribution and dependence estimates for one configuration.
    """

    def __init__(self, config: ExtractionConfig) -> None:
        """
        Initialize the PatternExtractor with a given configuration.

        Args:
            config (ExtractionConfig): The extraction configuration.

        Raises:
            TypeError: If 'config' is not an instance of ExtractionConfig.
            ExtractionError: If the tie strategy cannot be created.
        """
        logger.debug("Initializing PatternExtractor.")
        if not isinstance(config, ExtractionConfig):
            error_msg = f"config must be an instance of ExtractionConfig, got {type(config)} instead."
            logger.error(error_msg)
            raise TypeError(error_msg)

        self.config: ExtractionConfig = config
        try:
            self.strategy = config.create_strategy()
            logger.debug(f"PatternExtractor initialized with {type(self.strategy).__name__}.")
        except OrdinalPatternError:
            raise
        except Exception as e:
            error_msg = f"Failed to initialize PatternExtractor components: {e}"
            logger.exception(error_msg)
            raise ExtractionError(error_msg) from e

    def _configure(self, kwargs: Any) -> None:
        if kwargs:
            self.config.update(**kwargs)
            self.strategy = self.config.create_strategy()
            logger.debug(f"Configuration updated with parameters: {kwargs}")

    def extract_with_counter(self, series: SeriesLike, **kwargs: Any) -> Tuple[PatternSequence, int]:
        """
        Extract the pattern codes of a series and count value comparisons.

        Args:
            series (SeriesLike): The time series.
            **kwargs (Any): Parameters to override in the configuration.

        Returns:
            Tuple[PatternSequence, int]: Codes and comparison count.

        Raises:
            OrdinalPatternError: On invalid input or configuration.
            ExtractionError: If extraction fails unexpectedly.
        """
        try:
            self._configure(kwargs)
            return extract_with_counter(series, self.config)
        except OrdinalPatternError as e:
            logger.error(f"Extraction failed: {e}")
            raise
        except Exception as e:
            logger.exception("Unexpected error during extraction.")
            raise ExtractionError(f"Unexpected error during extraction: {e}") from e

    def extract(self, series: SeriesLike, **kwargs: Any) -> PatternSequence:
        """Extract the pattern codes of a series."""
        sequence, _ = self.extract_with_counter(series, **kwargs)
        return sequence

    def extract_chunked(self, series: SeriesLike, **kwargs: Any) -> PatternSequence:
        """
        Extract on a thread pool in chunks of ``chunk_windows`` windows.

        Raises:
            ConfigurationError: If no chunk size is configured.
            ExtractionError: If extraction fails unexpectedly.
        """
        try:
            self._configure(kwargs)
            sequence, _ = extract_chunked(series, self.config)
            return sequence
        except OrdinalPatternError as e:
            logger.error(f"Chunked extraction failed: {e}")
            raise
        except Exception as e:
            logger.exception("Unexpected error during chunked extraction.")
            raise ExtractionError(f"Unexpected error during chunked extraction: {e}") from e

    def distribution(self, series: SeriesLike, **kwargs: Any) -> PatternDistribution:
        """Relative pattern frequencies of a series."""
        return pattern_distribution(self.extract(series, **kwargs))

    def dependence(self, x: SeriesLike, y: SeriesLike, **kwargs: Any) -> OpdReport:
        """
        Ordinal pattern dependence of two series.

        Raises:
            OrdinalPatternError: On invalid input or configuration.
            ExtractionError: If the estimate fails unexpectedly.
        """
        try:
            self._configure(kwargs)
            return opd(x, y, self.config)
        except OrdinalPatternError as e:
            logger.error(f"Dependence estimate failed: {e}")
            raise
        except Exception as e:
            logger.exception("Unexpected error during dependence estimate.")
            raise ExtractionError(f"Unexpected error during dependence estimate: {e}") from e
