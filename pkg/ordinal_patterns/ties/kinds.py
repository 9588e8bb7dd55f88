from dataclasses import dataclass
from enum import Enum
from typing import Optional
import logging
import numbers
from ..exceptions import ConfigurationError

logger = logging.getLogger('ordinal_patterns.ties.kinds')

MAX_SEED = 2 ** 64


class TieKind(str, Enum):
    """How windows containing equal values are turned into patterns."""
    SKIP = "skip"
    PERTURB = "perturb"
    STABLE = "stable"
    GENERALIZED = "generalized"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member
        return None


@dataclass(frozen=True)
class TieStrategy:
    """
    Selected tie strategy. A seed is required by, and only allowed for, PERTURB.
    """

    kind: TieKind
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        try:
            kind = TieKind(self.kind)
        except ValueError as e:
            error_msg = f"Unknown tie strategy {self.kind!r}; expected one of {[k.value for k in TieKind]}."
            logger.error(error_msg)
            raise ConfigurationError(error_msg) from e
        object.__setattr__(self, "kind", kind)

        if kind is TieKind.PERTURB:
            if self.seed is None:
                error_msg = "The perturb tie strategy needs an explicit seed."
                logger.error(error_msg)
                raise ConfigurationError(error_msg)
            object.__setattr__(self, "seed", check_seed(self.seed))
        elif self.seed is not None:
            error_msg = f"A seed is only meaningful for the perturb tie strategy, not {kind.value!r}."
            logger.error(error_msg)
            raise ConfigurationError(error_msg)


def check_seed(seed: int) -> int:
    """Return the seed if it is a 64-bit unsigned integer, raise ConfigurationError otherwise."""
    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or not 0 <= seed < MAX_SEED:
        error_msg = f"Seed must be an integer in [0, 2**64), got {seed!r}."
        logger.error(error_msg)
        raise ConfigurationError(error_msg)
    return int(seed)
