"""
Space and time inversions of ordinal patterns in every representation.
"""

from .transform import (
    invert_space,
    invert_time,
    left_non_inversion_counts,
    reflect_code,
    reflect_generalized_code,
    reflect_codes,
)

__all__ = [
    "invert_space",
    "invert_time",
    "left_non_inversion_counts",
    "reflect_code",
    "reflect_generalized_code",
    "reflect_codes",
]
