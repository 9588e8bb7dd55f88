from dataclasses import dataclass
from typing import Any, Optional
import numpy as np
import logging
from ..encodings import EncodingScheme, pattern_weights
from ..exceptions import ConfigurationError

# Initialize logger for this module
logger = logging.getLogger('ordinal_patterns.base.strategy')


@dataclass(frozen=True, eq=False)
class WindowCodes:
    """
    Output of a tie strategy for a block of windows.

    Attributes:
        codes (np.ndarray): int64 code per window (0 where the window is absent).
        present (np.ndarray): False where the window produced no pattern.
        comparisons (int): Value comparisons spent on the block.
    """
    codes: np.ndarray
    present: np.ndarray
    comparisons: int


class BaseTieStrategy:
    """
    Base class for tie strategies, which turn a matrix of windows into codes.
    """

    #: Codes are indices into the generalized pattern list instead of d!-codes.
    generalized: bool = False

    def __init__(self, config: Any) -> None:
        """
        Initialize the strategy with an extraction configuration.

        Args:
            config (ExtractionConfig): The extraction configuration.

        Raises:
            ConfigurationError: If the configuration lacks the required attributes.
        """
        logger.debug(f"Initializing {type(self).__name__}.")
        missing = [attr for attr in ("d", "scheme", "strategy") if not hasattr(config, attr)]
        if missing:
            error_msg = f"Configuration object is missing required attributes: {', '.join(missing)}"
            logger.error(error_msg)
            raise ConfigurationError(error_msg)
        self.config = config
        self.d: int = config.d

    @property
    def scheme(self) -> Optional[EncodingScheme]:
        """Scheme of the emitted codes; None for generalized codes."""
        return None if self.generalized else self.config.scheme

    @property
    def weights(self) -> np.ndarray:
        return np.asarray(pattern_weights(self.d, self.config.scheme), dtype=np.int64)

    def encode_windows(self, windows: np.ndarray, starts: np.ndarray) -> WindowCodes:
        """
        Encode every row of a window matrix.

        Args:
            windows (np.ndarray): Matrix of shape (W, d).
            starts (np.ndarray): Zero-based start index of every window in its series.

        Returns:
            WindowCodes: Codes, presence flags and comparison count.

        Raises:
            NotImplementedError: If the subclass does not implement this method.
        """
        raise NotImplementedError("Subclasses must implement encode_windows.")
