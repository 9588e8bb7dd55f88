from .registry import TieStrategyRegistry
from .ties.strategies import (
    GeneralizedTieStrategy,
    PerturbTieStrategy,
    SkipTieStrategy,
    StableTieStrategy,
)
from .exceptions import RegistrationError
import logging

# Initialize logger for this module
logger = logging.getLogger('ordinal_patterns.default_strategies')


def register_default_strategies():
    """
    Register the skip, perturb, stable and generalized tie strategies.

    Raises:
        RegistrationError: If registration of any default strategy fails.
    """
    logger.debug("Registering default tie strategies.")
    try:
        TieStrategyRegistry.register("skip", {"strategy": SkipTieStrategy})
        TieStrategyRegistry.register("perturb", {"strategy": PerturbTieStrategy})
        TieStrategyRegistry.register("stable", {"strategy": StableTieStrategy})
        TieStrategyRegistry.register("generalized", {"strategy": GeneralizedTieStrategy})
    except RegistrationError as e:
        logger.exception("Failed to register default tie strategies.")
        raise RegistrationError(f"Failed to register default tie strategies: {e}") from e
    except Exception as e:
        logger.exception("An unexpected error occurred while registering default tie strategies.")
        raise RegistrationError(f"An unexpected error occurred: {e}") from e

    logger.debug("All default tie strategies registered.")
