from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Union
import logging
import numpy as np

from ..encodings import EncodingScheme, PatternCode
from ..exceptions import InputError
from ..ties import GeneralizedCode

logger = logging.getLogger('ordinal_patterns.analysis.sequence')

Code = Union[PatternCode, GeneralizedCode]


@dataclass(frozen=True, eq=False)
class PatternSequence:
    """
    Codes of all windows of a series, in window order.

    Attributes:
        codes (np.ndarray): int64 code per window; 0 where the window is absent.
        present (np.ndarray): False for windows that produced no pattern (skipped ties).
        d (int): Pattern length.
        scheme (Optional[EncodingScheme]): Scheme of the codes, None for generalized codes.
    """
    codes: np.ndarray
    present: np.ndarray
    d: int
    scheme: Optional[EncodingScheme]

    def __post_init__(self) -> None:
        if self.codes.shape != self.present.shape:
            error_msg = f"codes {self.codes.shape} and present {self.present.shape} differ in shape."
            logger.error(error_msg)
            raise InputError(error_msg)

    @property
    def generalized(self) -> bool:
        return self.scheme is None

    @property
    def present_count(self) -> int:
        return int(np.count_nonzero(self.present))

    @property
    def skipped(self) -> int:
        return len(self) - self.present_count

    def present_codes(self) -> np.ndarray:
        return self.codes[self.present]

    def _code(self, value: int) -> Code:
        if self.scheme is None:
            return GeneralizedCode(self.d, value)
        return PatternCode(self.d, self.scheme, value)

    def __len__(self) -> int:
        return int(self.codes.shape[0])

    def __getitem__(self, index: int) -> Optional[Code]:
        if not self.present[index]:
            return None
        return self._code(int(self.codes[index]))

    def __iter__(self) -> Iterator[Optional[Code]]:
        for value, present in zip(self.codes.tolist(), self.present.tolist()):
            yield self._code(value) if present else None

    def to_list(self) -> List[Optional[int]]:
        """Plain integer codes with None for absent windows."""
        return [value if present else None for value, present in zip(self.codes.tolist(), self.present.tolist())]

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "scheme": None if self.scheme is None else self.scheme.value,
            "codes": self.to_list(),
        }

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "PatternSequence":
        """
        Rebuild a sequence written by ``to_json_dict``; every code is range-checked.

        Raises:
            InputError: If a required key is missing.
            CodeRangeError: If a code is out of range.
        """
        try:
            d = int(data["d"])
            raw = list(data["codes"])
        except (KeyError, TypeError, ValueError) as e:
            error_msg = f"Malformed pattern sequence document: {e}"
            logger.error(error_msg)
            raise InputError(error_msg) from e
        scheme = data.get("scheme")
        scheme = None if scheme is None else EncodingScheme.parse(scheme)
        present = np.array([value is not None for value in raw], dtype=bool)
        codes = np.array([0 if value is None else int(value) for value in raw], dtype=np.int64)
        sequence = cls(codes, present, d, scheme)
        for value in np.unique(sequence.present_codes()).tolist():
            sequence._code(value)
        return sequence
