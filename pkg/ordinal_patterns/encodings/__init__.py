"""
Number representations of ordinal patterns.

Bijective integer encodings (KSE and Lehmer code) computed directly from the
inversion representation, their decoders, and the code table.
"""

from .schemes import (
    MAX_ENCODABLE_LENGTH,
    EncodingScheme,
    PatternCode,
    check_encodable_length,
    pattern_weights,
)
from .codec import CodeTableRow, encode, decode, encode_rank, decode_rank, code_table

__all__ = [
    "MAX_ENCODABLE_LENGTH",
    "EncodingScheme",
    "PatternCode",
    "CodeTableRow",
    "check_encodable_length",
    "pattern_weights",
    "encode",
    "decode",
    "encode_rank",
    "decode_rank",
    "code_table",
]
