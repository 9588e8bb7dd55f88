"""
Base module for pattern extraction components.

This module includes the extraction configuration and the base class of the
tie strategies.
"""

from .config import ExtractionConfig, ExtractionConfigModel
from .strategy import BaseTieStrategy, WindowCodes
from ..exceptions import (
    OrdinalPatternError,
    ConfigurationError,
    RegistrationError,
    ExtractionError,
)

__all__ = [
    "ExtractionConfig",
    "ExtractionConfigModel",
    "BaseTieStrategy",
    "WindowCodes",
    "OrdinalPatternError",
    "ConfigurationError",
    "RegistrationError",
    "ExtractionError",
]
