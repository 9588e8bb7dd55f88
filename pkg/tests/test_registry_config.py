import numpy as np
import pytest

from ordinal_patterns import ExtractionConfig, PatternExtractor, TieStrategyRegistry
from ordinal_patterns.base import BaseTieStrategy, WindowCodes
from ordinal_patterns.encodings import EncodingScheme
from ordinal_patterns.exceptions import ConfigurationError, LengthError, RegistrationError
from ordinal_patterns.ties import TieKind
from ordinal_patterns.ties.strategies import (
    GeneralizedTieStrategy,
    PerturbTieStrategy,
    SkipTieStrategy,
    StableTieStrategy,
)


def test_config_defaults():
    cfg = ExtractionConfig(d=3)
    assert cfg.lag == 1
    assert cfg.ties is TieKind.STABLE
    assert cfg.scheme is EncodingScheme.LEHMER
    assert cfg.seed is None
    assert cfg.span == 3
    assert cfg.strategy.kind is TieKind.STABLE


@pytest.mark.parametrize(
    "kwargs",
    [
        {"d": 1},
        {"d": 21},
        {"d": 3, "lag": 0},
        {"d": 3, "ties": "noise"},
        {"d": 3, "scheme": "gray"},
        {"d": 3, "ties": "perturb"},
        {"d": 3, "ties": "stable", "seed": 4},
        {"d": 3, "ties": "perturb", "seed": -1},
        {"d": 3, "ties": "perturb", "seed": 2 ** 64},
        {"d": 3, "chunk_windows": 0},
        {"lag": 2},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigurationError):
        ExtractionConfig(**kwargs)


def test_config_update_revalidates():
    cfg = ExtractionConfig(d=3)
    cfg.update(ties="perturb", seed=7, lag=2)
    assert cfg.strategy.seed == 7
    assert cfg.span == 5
    with pytest.raises(ConfigurationError):
        cfg.update(seed=None)
    assert cfg.seed == 7
    with pytest.raises(AttributeError):
        cfg.unknown_option


def test_config_copy_and_repr():
    cfg = ExtractionConfig(d=4, scheme="KSE")
    other = cfg.copy(d=5)
    assert other.d == 5 and other.scheme is EncodingScheme.KSE
    assert cfg.d == 4
    assert "d" in repr(cfg)


def test_default_strategies_are_registered():
    assert set(TieStrategyRegistry.list_strategies()) >= {"skip", "perturb", "stable", "generalized"}


@pytest.mark.parametrize(
    "ties, seed, cls",
    [
        ("skip", None, SkipTieStrategy),
        ("perturb", 1, PerturbTieStrategy),
        ("stable", None, StableTieStrategy),
        ("generalized", None, GeneralizedTieStrategy),
    ],
)
def test_create_strategy(ties, seed, cls):
    strategy = ExtractionConfig(d=3, ties=ties, seed=seed).create_strategy()
    assert type(strategy) is cls
    assert strategy.generalized is (ties == "generalized")


def test_generalized_strategy_length_limit():
    with pytest.raises(LengthError):
        ExtractionConfig(d=8, ties="generalized").create_strategy()


def test_get_extraction():
    cfg = TieStrategyRegistry.get_extraction("skip", d=3)
    assert isinstance(cfg, ExtractionConfig)
    assert cfg.ties is TieKind.SKIP
    extractor = TieStrategyRegistry.get_extraction("perturb", return_extractor=True, d=3, seed=2)
    assert isinstance(extractor, PatternExtractor)
    with pytest.raises(RegistrationError):
        TieStrategyRegistry.get_extraction("noise", d=3)
    with pytest.raises(ConfigurationError):
        TieStrategyRegistry.get_extraction("perturb", d=3)


def test_register_validation():
    with pytest.raises(RegistrationError):
        TieStrategyRegistry.register("noise", {"strategy": StableTieStrategy})
    with pytest.raises(RegistrationError):
        TieStrategyRegistry.register("stable", {})
    with pytest.raises(RegistrationError):
        TieStrategyRegistry.register("stable", {"strategy": object})


def test_registered_strategy_replaces_default():
    class ReversedStable(StableTieStrategy):
        def encode_windows(self, windows, starts):
            return super().encode_windows(windows[:, ::-1], starts)

    try:
        TieStrategyRegistry.register("stable", {"strategy": ReversedStable})
        extractor = TieStrategyRegistry.get_extraction("stable", return_extractor=True, d=3)
        assert extractor.extract([1, 2, 3]).to_list() == [5]
    finally:
        TieStrategyRegistry.register("stable", {"strategy": StableTieStrategy})


def test_base_strategy_is_abstract():
    strategy = BaseTieStrategy(ExtractionConfig(d=3))
    with pytest.raises(NotImplementedError):
        strategy.encode_windows(np.zeros((1, 3)), np.zeros(1, dtype=np.int64))
    with pytest.raises(ConfigurationError):
        BaseTieStrategy(object())


def test_extractor_pipeline(fig_window):
    extractor = PatternExtractor(ExtractionConfig(d=3))
    assert extractor.extract(fig_window).to_list() == [5, 2, 1]
    sequence, comparisons = extractor.extract_with_counter(fig_window)
    assert comparisons == 9
    assert extractor.distribution(fig_window).counts == {1: 1, 2: 1, 5: 1}
    assert extractor.dependence(fig_window, fig_window).signed == 1.0
    assert extractor.extract(fig_window, scheme="kse").to_list() == [5, 1, 3]
    assert extractor.extract_chunked(np.arange(10.0), chunk_windows=3).to_list() == [0] * 8


def test_extractor_requires_config():
    with pytest.raises(TypeError):
        PatternExtractor({"d": 3})


def test_window_codes_container():
    codes = WindowCodes(np.zeros(2, dtype=np.int64), np.ones(2, dtype=bool), 6)
    assert codes.comparisons == 6
