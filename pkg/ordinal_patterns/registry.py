from typing import Any, Dict, List, Type, Union
from .base.config import ExtractionConfig
from .base.strategy import BaseTieStrategy
from .extractor import PatternExtractor
from .exceptions import ConfigurationError, RegistrationError
from .ties.kinds import TieKind
import logging

# Initialize logger for this module
logger = logging.getLogger('ordinal_patterns.registry')


class TieStrategyRegistry:
    """
    Registry mapping tie-strategy names to the classes implementing them.
    """
    _registry: Dict[str, Dict[str, Type[Any]]] = {}

    @classmethod
    def register(cls, name: str, components: Dict[str, Type[Any]]) -> None:
        """
        Register a tie strategy with its components.

        Args:
            name (str): Tie kind the strategy implements (e.g., 'stable').
            components (Dict[str, Type[Any]]): A dictionary containing:
                - 'strategy': Subclass of BaseTieStrategy

        Raises:
            RegistrationError: If the name is unknown or components are missing or invalid.
        """
        logger.debug(f"Attempting to register tie strategy '{name}' with components: {list(components.keys())}")
        try:
            kind = TieKind(name)
        except ValueError as e:
            error_msg = f"'{name}' is not a tie kind; expected one of {[k.value for k in TieKind]}."
            logger.error(error_msg)
            raise RegistrationError(error_msg) from e

        if "strategy" not in components:
            error_msg = f"Components must include 'strategy'. Got keys: {set(components.keys())}"
            logger.error(error_msg)
            raise RegistrationError(error_msg)
        strategy = components["strategy"]
        if not isinstance(strategy, type) or not issubclass(strategy, BaseTieStrategy):
            error_msg = "'strategy' component must be a subclass of BaseTieStrategy."
            logger.error(error_msg)
            raise RegistrationError(error_msg)

        cls._registry[kind.value] = components
        logger.info(f"Tie strategy '{kind.value}' registered successfully.")

    @classmethod
    def create_strategy(cls, config: ExtractionConfig) -> BaseTieStrategy:
        """
        Instantiate the strategy registered for the tie kind of a configuration.

        Raises:
            RegistrationError: If no strategy is registered for the tie kind.
        """
        name = config.strategy.kind.value
        if name not in cls._registry:
            error_msg = f"Tie strategy '{name}' not found in the registry."
            logger.error(error_msg)
            raise RegistrationError(error_msg)
        return cls._registry[name]["strategy"](config)

    @classmethod
    def get_extraction(
        cls,
        name: str,
        return_extractor: bool = False,
        **kwargs: Any
    ) -> Union[ExtractionConfig, PatternExtractor]:
        """
        Retrieve a configured extraction by tie-strategy name.

        Args:
            name (str): Name of the tie strategy.
            return_extractor (bool): Whether to return the extractor instead of the config.
            **kwargs (Any): Remaining ExtractionConfig parameters (d, lag, seed, scheme, ...).

        Returns:
            Union[ExtractionConfig, PatternExtractor]: Depending on `return_extractor`.

        Raises:
            RegistrationError: If the strategy name is not found.
            ConfigurationError: If the parameters are invalid.
        """
        logger.debug(f"Retrieving extraction '{name}' with parameters: {kwargs}")
        key = name.lower() if isinstance(name, str) else name
        if key not in cls._registry:
            error_msg = f"Tie strategy '{name}' not found in the registry."
            logger.error(error_msg)
            raise RegistrationError(error_msg)

        try:
            config = ExtractionConfig(ties=key, **kwargs)
        except ConfigurationError:
            raise
        except Exception as e:
            error_msg = f"Failed to build configuration for tie strategy '{name}': {e}"
            logger.exception(error_msg)
            raise RegistrationError(error_msg) from e

        if return_extractor:
            logger.debug(f"Returning PatternExtractor for tie strategy '{name}'.")
            return PatternExtractor(config)

        logger.debug(f"Returning ExtractionConfig for tie strategy '{name}'.")
        return config

    @classmethod
    def list_strategies(cls) -> List[str]:
        """
        List all registered tie strategies.

        Returns:
            List[str]: Registered names.
        """
        strategies = list(cls._registry.keys())
        logger.debug(f"Registered tie strategies: {strategies}")
        return strategies
