"""
Custom exception classes for the ordinal_patterns package.
"""

from typing import Optional


class OrdinalPatternError(Exception):
    """Base exception for ordinal-pattern related errors."""
    pass

class ConfigurationError(OrdinalPatternError):
    """Exception raised for configuration-related issues."""
    pass

class RegistrationError(OrdinalPatternError):
    """Exception raised during tie-strategy registration or lookup."""
    pass

class InputError(OrdinalPatternError, ValueError):
    """Exception raised for malformed input windows or series (NaN, infinity, wrong shape)."""
    pass

class TieError(InputError):
    """Exception raised when a tie-free operation receives a window with equal values."""
    pass

class LengthError(InputError):
    """Exception raised when a pattern length or series length is out of range."""
    pass

class LengthMismatchError(InputError):
    """Exception raised when two series that must be aligned differ in length."""
    pass

class InvalidPatternError(OrdinalPatternError, ValueError):
    """Exception raised when a tuple is not a valid pattern representation."""
    pass

class CodeRangeError(OrdinalPatternError, ValueError):
    """Exception raised when a pattern code or a combinatorial argument is out of range."""
    pass

class EncodingOverflowError(OrdinalPatternError, OverflowError):
    """Exception raised when d! does not fit into a signed 64-bit integer."""
    pass

class MixedConfigError(OrdinalPatternError, ValueError):
    """Exception raised when codes of different lengths or schemes are mixed."""
    pass

class EmptyDistributionError(OrdinalPatternError, ValueError):
    """Exception raised when a statistic needs at least one observed pattern."""
    pass

class ExtractionError(OrdinalPatternError):
    """Exception raised when a pattern extraction fails unexpectedly."""
    pass

class SeriesIOError(OrdinalPatternError, OSError):
    """Exception raised when a series file cannot be read."""
    pass

class ParseError(OrdinalPatternError, ValueError):
    """Exception raised for a cell that does not parse as a finite number, or an unreadable CSV line."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[str] = None) -> None:
        super().__init__(message)
        self.line = line
        self.column = column


class EmptyColumnError(OrdinalPatternError, ValueError):
    """Exception raised when the selected column holds no values."""
    pass
