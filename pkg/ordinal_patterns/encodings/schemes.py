from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Tuple, Union
import logging
from ..exceptions import CodeRangeError, EncodingOverflowError, ConfigurationError, LengthError

logger = logging.getLogger('ordinal_patterns.encodings.schemes')

# 20! < 2**63 - 1 < 21!
MAX_ENCODABLE_LENGTH = 20


class EncodingScheme(str, Enum):
    """
    Bijective number representations of ordinal patterns.

    KSE weights the inversion count i_j by d!/(d-j+1)!, LEHMER by (d-j)!.
    Only LEHMER preserves the lexicographic order of rank tuples.
    """
    KSE = "kse"
    LEHMER = "lehmer"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member
        return None

    @classmethod
    def parse(cls, value: Union[str, "EncodingScheme"]) -> "EncodingScheme":
        try:
            return cls(value)
        except ValueError as e:
            error_msg = f"Unknown encoding scheme {value!r}; expected one of {[m.value for m in cls]}."
            logger.error(error_msg)
            raise ConfigurationError(error_msg) from e


def check_encodable_length(d: int) -> None:
    """
    Raise if patterns of length d cannot be numbered within signed 64-bit integers.
    """
    if d < 2:
        error_msg = f"Pattern length must be at least 2, got d={d}."
        logger.error(error_msg)
        raise LengthError(error_msg)
    if d > MAX_ENCODABLE_LENGTH:
        error_msg = f"d={d} exceeds the encodable maximum {MAX_ENCODABLE_LENGTH} (d! overflows int64)."
        logger.error(error_msg)
        raise EncodingOverflowError(error_msg)


@lru_cache(maxsize=None)
def pattern_weights(d: int, scheme: EncodingScheme) -> Tuple[int, ...]:
    """
    Exact integer weights w_1, ..., w_d such that code = sum_j i_j * w_j.

    Args:
        d (int): Pattern length, 2 <= d <= 20.
        scheme (EncodingScheme): KSE or LEHMER.

    Returns:
        Tuple[int, ...]: The weight of every inversion count.
    """
    check_encodable_length(d)
    scheme = EncodingScheme.parse(scheme)
    if scheme is EncodingScheme.LEHMER:
        return tuple(factorial(d - j) for j in range(1, d + 1))
    d_factorial = factorial(d)
    return tuple(d_factorial // factorial(d - j + 1) for j in range(1, d + 1))


@dataclass(frozen=True)
class PatternCode:
    """Integer label in [0, d! - 1] of an ordinal pattern under a named scheme."""

    d: int
    scheme: EncodingScheme
    value: int

    def __post_init__(self) -> None:
        check_encodable_length(self.d)
        object.__setattr__(self, "scheme", EncodingScheme.parse(self.scheme))
        value = int(self.value)
        if not 0 <= value < factorial(self.d):
            error_msg = f"Code {value} outside [0, {factorial(self.d) - 1}] for d={self.d}."
            logger.error(error_msg)
            raise CodeRangeError(error_msg)
        object.__setattr__(self, "value", value)

    def __int__(self) -> int:
        return self.value
