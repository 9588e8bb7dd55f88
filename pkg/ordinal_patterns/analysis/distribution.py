"""
Empirical distributions of ordinal patterns and their entropy.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Any, Dict, Iterable, Optional, Tuple, Union
import logging
import numpy as np
from scipy.stats import entropy

from .sequence import Code, PatternSequence
from ..encodings import EncodingScheme, PatternCode, decode_rank
from ..exceptions import ConfigurationError, EmptyDistributionError, InputError, MixedConfigError
from ..ties import GeneralizedCode, fubini, generalized_from_code

logger = logging.getLogger('ordinal_patterns.analysis.distribution')


@dataclass(frozen=True)
class PatternDistribution:
    """
    Counts of the patterns observed in a sequence of codes.

    Attributes:
        d (int): Pattern length.
        scheme (Optional[EncodingScheme]): Scheme of the codes, None for generalized codes.
        counts (Dict[int, int]): Observed codes and how often they occur.
        total (int): Number of present codes.
        skipped (int): Number of absent entries (windows dropped by the skip strategy).
    """
    d: int
    scheme: Optional[EncodingScheme]
    counts: Dict[int, int] = field(default_factory=dict)
    total: int = 0
    skipped: int = 0

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.total:
            error_msg = f"Counts sum to {sum(self.counts.values())}, not to total={self.total}."
            logger.error(error_msg)
            raise InputError(error_msg)
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @property
    def generalized(self) -> bool:
        return self.scheme is None

    @property
    def n_possible(self) -> int:
        """Number of distinct patterns of length d (d! or the Fubini number)."""
        return fubini(self.d) if self.generalized else factorial(self.d)

    @property
    def frequencies(self) -> Dict[int, float]:
        """Relative frequency of every observed code; empty when nothing was observed."""
        if self.total == 0:
            return {}
        return {code: count / self.total for code, count in self.counts.items()}

    def frequency(self, code: Union[int, Code]) -> float:
        """
        Relative frequency of one code (0.0 if never observed).

        Raises:
            EmptyDistributionError: If the distribution is empty.
        """
        if self.total == 0:
            error_msg = "Relative frequencies of an empty distribution are undefined."
            logger.error(error_msg)
            raise EmptyDistributionError(error_msg)
        return self.counts.get(int(code), 0) / self.total

    def pattern_of(self, code: int) -> Tuple[int, ...]:
        """Rank tuple (or generalized rank tuple) labelled by a code."""
        if self.generalized:
            return generalized_from_code(GeneralizedCode(self.d, code)).psi
        return decode_rank(PatternCode(self.d, self.scheme, code)).ranks

    def merge(self, other: "PatternDistribution") -> "PatternDistribution":
        """
        Combine the counts of two distributions over the same d and scheme.

        Raises:
            MixedConfigError: If d or the scheme differ.
        """
        if (self.d, self.scheme) != (other.d, other.scheme):
            error_msg = (
                f"Cannot merge distributions with d={self.d}, scheme={self.scheme} "
                f"and d={other.d}, scheme={other.scheme}."
            )
            logger.error(error_msg)
            raise MixedConfigError(error_msg)
        counts = dict(self.counts)
        for code, count in other.counts.items():
            counts[code] = counts.get(code, 0) + count
        return PatternDistribution(self.d, self.scheme, counts, self.total + other.total, self.skipped + other.skipped)

    def to_json_dict(self, include_unobserved: bool = False) -> Dict[str, Any]:
        codes = range(self.n_possible) if include_unobserved else self.counts.keys()
        rows = []
        for code in codes:
            count = self.counts.get(code, 0)
            rows.append({
                "code": code,
                "pattern": list(self.pattern_of(code)),
                "count": count,
                "frequency": round(count / self.total, 6) if self.total else None,
            })
        return {
            "d": self.d,
            "scheme": None if self.scheme is None else self.scheme.value,
            "total": self.total,
            "skipped": self.skipped,
            "patterns": rows,
        }


def _code_config(code: Code) -> Tuple[int, Optional[EncodingScheme]]:
    if isinstance(code, GeneralizedCode):
        return code.d, None
    return code.d, code.scheme


def pattern_distribution(
    codes: Union[PatternSequence, Iterable[Optional[Union[int, Code]]]],
    d: Optional[int] = None,
    scheme: Optional[Union[EncodingScheme, str]] = EncodingScheme.LEHMER,
) -> PatternDistribution:
    """
    Count the present codes of a sequence; absent entries are counted as skipped.

    When d is None, d and scheme are taken from the codes themselves (a
    PatternSequence or the first code object) and the scheme argument is
    ignored. ``scheme=None`` denotes generalized codes.

    Args:
        codes: A PatternSequence, or an iterable of PatternCode, GeneralizedCode,
            plain integers and None.
        d (Optional[int]): Pattern length of the codes.
        scheme (Optional[EncodingScheme]): Scheme of the codes.

    Returns:
        PatternDistribution: The counts.

    Raises:
        MixedConfigError: If codes of different lengths or schemes are mixed.
        CodeRangeError: If a plain integer code is out of range.
        ConfigurationError: If d is None and cannot be taken from the codes.
    """
    if isinstance(codes, PatternSequence):
        if d is None:
            d, scheme = codes.d, codes.scheme
        elif scheme is not None:
            scheme = EncodingScheme.parse(scheme)
        if (codes.d, codes.scheme) != (d, scheme):
            error_msg = f"Sequence has d={codes.d}, scheme={codes.scheme}; expected d={d}, scheme={scheme}."
            logger.error(error_msg)
            raise MixedConfigError(error_msg)
        unique, counts = np.unique(codes.present_codes(), return_counts=True)
        return PatternDistribution(
            d, scheme, dict(zip(unique.tolist(), counts.tolist())), codes.present_count, codes.skipped
        )

    entries = list(codes)
    if d is None:
        first = next((c for c in entries if isinstance(c, (PatternCode, GeneralizedCode))), None)
        if first is None:
            error_msg = "d is required when the codes are plain integers or all absent."
            logger.error(error_msg)
            raise ConfigurationError(error_msg)
        d, scheme = _code_config(first)
    elif scheme is not None:
        scheme = EncodingScheme.parse(scheme)

    counts: Dict[int, int] = {}
    skipped = 0
    for entry in entries:
        if entry is None:
            skipped += 1
            continue
        if isinstance(entry, (PatternCode, GeneralizedCode)):
            if _code_config(entry) != (d, scheme):
                error_msg = f"Code {entry} does not match d={d}, scheme={scheme}."
                logger.error(error_msg)
                raise MixedConfigError(error_msg)
            value = entry.value
        else:
            value = GeneralizedCode(d, entry).value if scheme is None else PatternCode(d, scheme, entry).value
        counts[value] = counts.get(value, 0) + 1
    total = len(entries) - skipped
    logger.debug(f"Counted {total} codes ({len(counts)} distinct, {skipped} skipped).")
    return PatternDistribution(d, scheme, counts, total, skipped)


def pattern_entropy(dist: PatternDistribution) -> float:
    """
    Shannon entropy of the relative frequencies, in nats.

    Raises:
        EmptyDistributionError: If the distribution is empty.

    Example:
        >>> dist = pattern_distribution([0, 1], d=2)
        >>> round(pattern_entropy(dist), 6)
        0.693147
    """
    if dist.total == 0:
        error_msg = "Entropy of an empty pattern distribution is undefined."
        logger.error(error_msg)
        raise EmptyDistributionError(error_msg)
    return float(entropy(np.fromiter(dist.counts.values(), dtype=np.float64)))
