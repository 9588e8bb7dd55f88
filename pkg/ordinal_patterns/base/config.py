from typing import Any, Optional
from pydantic import BaseModel, Field, validator
import logging
from ..encodings import EncodingScheme, check_encodable_length
from ..exceptions import ConfigurationError, OrdinalPatternError
from ..ties.kinds import TieKind, TieStrategy

# Initialize logger for this module
logger = logging.getLogger('ordinal_patterns.base.config')


class ExtractionConfigModel(BaseModel):
    """
    Pydantic model holding the parameters of a sliding-window pattern extraction.

    Attributes:
        d (int): Pattern length.
        lag (int): Spacing between consecutive window entries, in samples.
        ties (TieKind): Tie strategy.
        seed (Optional[int]): Seed of the perturb strategy.
        scheme (EncodingScheme): Number representation of the emitted codes.
        chunk_windows (Optional[int]): Windows per chunk for chunked extraction.
        max_workers (Optional[int]): Threads used for chunked extraction.
    """
    d: int = Field(..., description="Pattern length (number of entries per window).")
    lag: int = Field(1, description="Spacing between consecutive window entries, in samples.")
    ties: TieKind = Field(TieKind.STABLE, description="Tie strategy: skip, perturb, stable or generalized.")
    seed: Optional[int] = Field(None, description="Seed of the perturb tie strategy.")
    scheme: EncodingScheme = Field(EncodingScheme.LEHMER, description="Encoding scheme: lehmer or kse.")
    chunk_windows: Optional[int] = Field(None, description="Windows per chunk; None extracts in a single pass.")
    max_workers: Optional[int] = Field(None, description="Worker threads for chunked extraction.")

    @validator('d')
    def validate_d(cls, v):
        """
        Validate that patterns of length d can be numbered.
        """
        try:
            check_encodable_length(v)
        except OrdinalPatternError as e:
            raise ValueError(str(e)) from e
        return v

    @validator('lag')
    def validate_lag(cls, v):
        if v < 1:
            raise ValueError(f"lag must be at least 1, got {v}.")
        return v

    @validator('chunk_windows', 'max_workers')
    def validate_positive(cls, v):
        if v is not None and v < 1:
            raise ValueError(f"must be at least 1, got {v}.")
        return v


class ExtractionConfig:
    """
    Configuration of a pattern extraction, validated with Pydantic.

    Wraps an ExtractionConfigModel, exposes its fields as attributes and
    checks that a seed is given exactly when the perturb strategy is chosen.
    """

    def __init__(self, **kwargs: Any) -> None:
        """
        Initialize the ExtractionConfig with provided parameters.

        Args:
            **kwargs (Any): Fields of ExtractionConfigModel.

        Raises:
            ConfigurationError: If the parameters are invalid.
        """
        logger.debug("Initializing ExtractionConfig with parameters: %s", kwargs)
        try:
            self.config = ExtractionConfigModel(**kwargs)
        except Exception as e:
            error_msg = f"Failed to initialize ExtractionConfig: {e}"
            logger.error(error_msg)
            raise ConfigurationError(error_msg) from e
        self._strategy = TieStrategy(self.config.ties, self.config.seed)
        logger.debug("ExtractionConfig initialized successfully.")

    @property
    def strategy(self) -> TieStrategy:
        """The selected tie strategy (kind and seed)."""
        return self._strategy

    @property
    def span(self) -> int:
        """Number of samples covered by one window."""
        return (self.config.d - 1) * self.config.lag + 1

    def to_dict(self) -> dict:
        return self.config.dict()

    def update(self, **kwargs: Any) -> None:
        """
        Update configuration parameters, re-validating the whole configuration.

        Args:
            **kwargs (Any): Parameters to update in the configuration.

        Raises:
            ConfigurationError: If updating fails due to invalid parameters.
        """
        logger.debug(f"Updating ExtractionConfig with parameters: {kwargs}")
        merged = {**self.config.dict(), **kwargs}
        try:
            config = ExtractionConfigModel(**merged)
        except Exception as e:
            error_msg = f"Failed to update ExtractionConfig: {e}"
            logger.error(error_msg)
            raise ConfigurationError(error_msg) from e
        strategy = TieStrategy(config.ties, config.seed)
        self.config, self._strategy = config, strategy

    def copy(self, **kwargs: Any) -> "ExtractionConfig":
        """Return a new configuration with some parameters replaced."""
        return ExtractionConfig(**{**self.config.dict(), **kwargs})

    def create_strategy(self):
        """
        Instantiate the registered tie strategy for this configuration.

        Returns:
            BaseTieStrategy: The strategy object.
        """
        from ..registry import TieStrategyRegistry
        return TieStrategyRegistry.create_strategy(self)

    def __getattr__(self, item: str) -> Any:
        """
        Access configuration parameters as attributes.

        Raises:
            AttributeError: If the parameter does not exist.
        """
        if item == "config":
            raise AttributeError(item)
        try:
            return getattr(self.config, item)
        except AttributeError:
            raise AttributeError(f"'ExtractionConfig' object has no attribute '{item}'") from None

    def __repr__(self) -> str:
        return f"ExtractionConfig({self.config.dict()})"
