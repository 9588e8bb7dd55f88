from collections import Counter
from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.stats import chisquare

from ordinal_patterns.core import rank_pattern
from ordinal_patterns.exceptions import CodeRangeError, ConfigurationError, InputError, InvalidPatternError, LengthError
from ordinal_patterns.ties import (
    GeneralizedCode,
    GeneralizedPermutationPattern,
    GeneralizedRankPattern,
    TieKind,
    TieStrategy,
    enumerate_generalized,
    fubini,
    fubini_table,
    generalized_code,
    generalized_codes_batch,
    generalized_from_code,
    generalized_permutation,
    generalized_permutation_from_rank,
    generalized_rank,
    has_ties,
    perturb_resolve,
    rank_from_generalized_permutation,
    stable_permutation,
    stable_rank,
)


@pytest.mark.parametrize(
    "window, expected",
    [((4, 4, 6), True), ((9, 5, 4, 10, 8), False), ((7, 7), True)],
)
def test_has_ties(window, expected):
    assert has_ties(window) is expected


def test_has_ties_rejects_nan():
    with pytest.raises(InputError):
        has_ties((1.0, float("nan")))


@pytest.mark.parametrize(
    "window, ranks",
    [((1, 1, 1), (1, 2, 3)), ((1, 10, 100), (1, 2, 3)), ((5, 3, 5), (2, 1, 3))],
)
def test_stable_rank(window, ranks):
    assert stable_rank(window).ranks == ranks


def test_stable_permutation_keeps_index_order_for_ties():
    assert stable_permutation((5, 3, 5)).indices == (2, 1, 3)
    assert stable_permutation((2, 2, 1, 2)).indices == (3, 1, 2, 4)


def test_perturb_keeps_tie_free_windows():
    for seed in range(20):
        assert rank_pattern(perturb_resolve((1, 2, 3), seed)).ranks == (1, 2, 3)


def test_perturb_is_deterministic():
    w = (3, 3, 1, 3, 2, 2)
    first = perturb_resolve(w, 12345, start=17)
    assert np.array_equal(first, perturb_resolve(w, 12345, start=17))


def test_perturb_two_way_tie_is_fair():
    hits = sum(rank_pattern(perturb_resolve((4, 4, 6), seed)).ranks == (1, 2, 3) for seed in range(10_000))
    assert abs(hits / 10_000 - 0.5) <= 0.02
    outcomes = {rank_pattern(perturb_resolve((4, 4, 6), seed)).ranks for seed in range(100)}
    assert outcomes == {(1, 2, 3), (2, 1, 3)}


def test_perturb_three_way_tie_is_uniform():
    counts = Counter(rank_pattern(perturb_resolve((7, 7, 7), seed)).ranks for seed in range(10_000))
    assert set(counts) == set(permutations((1, 2, 3)))
    _, p_value = chisquare(list(counts.values()))
    assert p_value > 0.001


@given(st.lists(st.integers(0, 4), min_size=2, max_size=8), st.integers(0, 2 ** 64 - 1), st.integers(0, 10 ** 6))
def test_perturb_never_swaps_ordered_pairs(values, seed, start):
    resolved = perturb_resolve(values, seed, start)
    assert len(set(resolved.tolist())) == len(values)
    for j, k in product(range(len(values)), repeat=2):
        if values[j] < values[k]:
            assert resolved[j] < resolved[k]


def test_perturb_rejects_bad_seed():
    with pytest.raises(ConfigurationError):
        perturb_resolve((1, 1), -1)
    with pytest.raises(ConfigurationError):
        perturb_resolve((1, 1), 2 ** 64)


@pytest.mark.parametrize(
    "window, psi, m",
    [((1, 5, 4, 3), (1, 4, 3, 2), 4), ((1, 1, 4, 3), (1, 1, 3, 2), 3), ((2, 2, 2), (1, 1, 1), 1)],
)
def test_generalized_rank(window, psi, m):
    pattern = generalized_rank(window)
    assert pattern.psi == psi
    assert pattern.m == m


@pytest.mark.parametrize(
    "window, groups",
    [((4, 4, 6), ((1, 2), (3,))), ((1, 2, 3), ((1,), (2,), (3,))), ((5, 3, 5), ((2,), (1, 3)))],
)
def test_generalized_permutation(window, groups):
    pattern = generalized_permutation(window)
    assert pattern.as_tuple() == groups
    assert rank_from_generalized_permutation(pattern) == generalized_rank(window)
    assert generalized_permutation_from_rank(generalized_rank(window)) == pattern


def test_invalid_generalized_patterns():
    with pytest.raises(InvalidPatternError):
        GeneralizedRankPattern((1, 3, 3))
    with pytest.raises(InvalidPatternError):
        GeneralizedPermutationPattern(({1, 2}, {2, 3}))
    with pytest.raises(InvalidPatternError):
        GeneralizedPermutationPattern(({1}, set(), {2}))


def test_fubini_numbers():
    assert fubini_table(6) == [1, 1, 3, 13, 75, 541, 4683]
    assert fubini(15) == 230283190977853
    with pytest.raises(CodeRangeError):
        fubini(16)
    with pytest.raises(CodeRangeError):
        fubini(-1)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_fubini_matches_exhaustive_enumeration(d):
    distinct = {generalized_rank(w).psi for w in product(range(1, d + 1), repeat=d)}
    assert len(distinct) == fubini(d)


def test_enumerate_generalized():
    assert [p.psi for p in enumerate_generalized(2)] == [(1, 1), (1, 2), (2, 1)]
    patterns = enumerate_generalized(3)
    assert len(patterns) == 13
    assert patterns[0].psi == (1, 1, 1)
    # every pattern is witnessed by a window
    for pattern in patterns:
        assert generalized_rank(pattern.psi) == pattern
    with pytest.raises(LengthError):
        enumerate_generalized(8)


@pytest.mark.parametrize("d", range(2, 6))
def test_generalized_code_roundtrip(d):
    for index, pattern in enumerate(enumerate_generalized(d)):
        code = generalized_code(pattern)
        assert code == GeneralizedCode(d, index)
        assert generalized_from_code(code) == pattern


def test_generalized_codes_batch_matches_scalar_path():
    rng = np.random.default_rng(7)
    windows = rng.integers(0, 4, size=(500, 5)).astype(float)
    codes, comparisons = generalized_codes_batch(windows)
    assert comparisons == 500 * 10
    expected = [generalized_code(generalized_rank(w)).value for w in windows]
    assert codes.tolist() == expected


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7))
def test_generalized_rank_is_monotone_invariant_and_surjective(values):
    pattern = generalized_rank(values)
    assert set(pattern.psi) == set(range(1, pattern.m + 1))
    assert pattern.m == len(set(values))
    assert generalized_rank([v ** 3 + 2 * v for v in values]) == pattern


@given(st.lists(st.integers(-1000, 1000), min_size=2, max_size=7, unique=True))
def test_tie_free_windows_agree_across_representations(values):
    assert stable_rank(values).ranks == generalized_rank(values).psi == rank_pattern(values).ranks


def test_tie_strategy_seed_rules():
    assert TieStrategy(TieKind.PERTURB, 3).seed == 3
    assert TieStrategy("Stable").kind is TieKind.STABLE
    with pytest.raises(ConfigurationError):
        TieStrategy(TieKind.PERTURB)
    with pytest.raises(ConfigurationError):
        TieStrategy(TieKind.SKIP, 3)
    with pytest.raises(ConfigurationError):
        TieStrategy("noise")
    with pytest.raises(ConfigurationError):
        TieStrategy(TieKind.PERTURB, True)
