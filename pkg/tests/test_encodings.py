from itertools import combinations, permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from ordinal_patterns.core import InversionPattern, RankPattern, enumerate_patterns, rank_to_inversion
from ordinal_patterns.encodings import (
    EncodingScheme,
    PatternCode,
    code_table,
    decode,
    decode_rank,
    encode,
    encode_rank,
    pattern_weights,
)
from ordinal_patterns.exceptions import (
    CodeRangeError,
    ConfigurationError,
    EncodingOverflowError,
    LengthError,
)

TABLE_D3 = [
    ((1, 2, 3), (0, 0, 0), 0, 0),
    ((1, 3, 2), (0, 1, 0), 3, 1),
    ((2, 1, 3), (1, 0, 0), 1, 2),
    ((2, 3, 1), (1, 1, 0), 4, 3),
    ((3, 1, 2), (2, 0, 0), 2, 4),
    ((3, 2, 1), (2, 1, 0), 5, 5),
]


def test_code_table_d3_golden():
    rows = [(r.rank.ranks, r.inversion.counts, r.kse, r.lehmer) for r in code_table(3)]
    assert rows == TABLE_D3


def test_code_table_d4_first_row():
    rows = code_table(4)
    assert len(rows) == 24
    assert (rows[0].rank.ranks, rows[0].inversion.counts, rows[0].kse, rows[0].lehmer) == ((1, 2, 3, 4), (0, 0, 0, 0), 0, 0)


def test_code_table_rejects_large_d():
    with pytest.raises(LengthError):
        code_table(10)


@pytest.mark.parametrize(
    "counts, scheme, value",
    [
        ((0, 1, 0), EncodingScheme.KSE, 3),
        ((1, 1, 0), EncodingScheme.LEHMER, 3),
        ((3, 1, 0, 1, 0), EncodingScheme.LEHMER, 79),
        ((3, 1, 0, 1, 0), EncodingScheme.KSE, 68),
        ((1, 0), EncodingScheme.LEHMER, 1),
    ],
)
def test_encode(counts, scheme, value):
    assert encode(InversionPattern(counts), scheme).value == value


def test_weights():
    assert pattern_weights(4, EncodingScheme.LEHMER) == (6, 2, 1, 1)
    assert pattern_weights(4, EncodingScheme.KSE) == (1, 4, 12, 24)


def test_scheme_names_are_case_insensitive():
    assert EncodingScheme("KSE") is EncodingScheme.KSE
    assert EncodingScheme.parse("Lehmer") is EncodingScheme.LEHMER
    with pytest.raises(ConfigurationError):
        EncodingScheme.parse("gray")


@pytest.mark.parametrize("scheme", list(EncodingScheme))
@pytest.mark.parametrize("d", range(2, 8))
def test_encode_is_bijective(d, scheme):
    seen = set()
    for ranks in permutations(range(1, d + 1)):
        inversion = rank_to_inversion(RankPattern(ranks))
        code = encode(inversion, scheme)
        assert 0 <= code.value < factorial(d)
        assert decode(code) == inversion
        seen.add(code.value)
    assert len(seen) == factorial(d)


@pytest.mark.parametrize("d", range(2, 7))
def test_lehmer_code_preserves_lexicographic_order(d):
    patterns = enumerate_patterns(d)
    codes = [encode_rank(p).value for p in patterns]
    inversions = [rank_to_inversion(p).counts for p in patterns]
    assert codes == list(range(factorial(d)))
    for a, b in combinations(range(len(patterns)), 2):
        assert (patterns[a].ranks < patterns[b].ranks) == (codes[a] < codes[b])
        assert (inversions[a] < inversions[b]) == (codes[a] < codes[b])


def test_kse_order_is_not_lexicographic():
    low, high = RankPattern((1, 3, 2)), RankPattern((2, 1, 3))
    assert low.ranks < high.ranks
    assert encode_rank(low, EncodingScheme.KSE).value == 3
    assert encode_rank(high, EncodingScheme.KSE).value == 1


@pytest.mark.parametrize(
    "d, scheme, value, ranks",
    [
        (3, EncodingScheme.LEHMER, 3, (2, 3, 1)),
        (3, EncodingScheme.KSE, 4, (2, 3, 1)),
        (5, EncodingScheme.LEHMER, 79, (4, 2, 1, 5, 3)),
    ],
)
def test_decode_rank(d, scheme, value, ranks):
    assert decode_rank(PatternCode(d, scheme, value)).ranks == ranks


def test_code_range_and_overflow():
    with pytest.raises(CodeRangeError):
        PatternCode(3, EncodingScheme.LEHMER, 6)
    with pytest.raises(CodeRangeError):
        PatternCode(3, EncodingScheme.KSE, -1)
    with pytest.raises(EncodingOverflowError):
        pattern_weights(21, EncodingScheme.LEHMER)
    assert PatternCode(20, EncodingScheme.LEHMER, factorial(20) - 1).value == factorial(20) - 1


@given(st.integers(2, 12).flatmap(lambda d: st.permutations(list(range(1, d + 1)))), st.sampled_from(list(EncodingScheme)))
def test_rank_code_roundtrip(ranks, scheme):
    pattern = RankPattern(tuple(ranks))
    assert decode_rank(encode_rank(pattern, scheme)) == pattern
