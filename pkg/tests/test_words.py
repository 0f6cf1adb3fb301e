from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdbg.words import (
    ParameterError,
    ResourceLimitError,
    count_words,
    enumerate_words,
    is_t_constrained,
    iter_words,
    parse,
    rank,
    serialize,
    unrank,
)


@st.composite
def params(draw, max_d=6, max_n=6):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    t = draw(st.integers(1, min(d, n)))
    return d, t, n


@pytest.mark.parametrize(
    "w,t,expected",
    [((1, 2, 1), 2, True), ((1, 2, 1), 3, False), ((2, 3, 1, 2), 3, True), ((), 4, True), ((1, 1), 1, True)],
)
def test_is_t_constrained(w, t, expected):
    assert is_t_constrained(w, t) is expected


def test_is_t_constrained_rejects_zero_t():
    with pytest.raises(ParameterError):
        is_t_constrained((1,), 0)


def test_windowed_check_sees_only_recent_symbols():
    # the repeat of 1 is three apart, fine for t=3 but not t=4
    assert is_t_constrained((1, 2, 3, 1), 3)
    assert not is_t_constrained((1, 2, 3, 1), 4)
    assert (1, 2, 1, 3, 4) not in set(iter_words(4, 4, 5))


@pytest.mark.parametrize("d,t,n,expected", [(3, 2, 2, 6), (4, 3, 4, 48), (2, 1, 3, 8), (5, 5, 5, 120)])
def test_count_words(d, t, n, expected):
    assert count_words(d, t, n) == expected


@pytest.mark.parametrize("d,t,n", [(3, 4, 4), (3, 0, 2), (0, 1, 1), (2, 3, 2)])
def test_count_rejects_bad_params(d, t, n):
    with pytest.raises(ParameterError):
        count_words(d, t, n)


def test_count_is_exact_for_large_values():
    assert count_words(30, 25, 40) == factorial(30) // factorial(5) * 6**15


def test_enumerate_examples():
    assert enumerate_words(2, 2, 2) == [(1, 2), (2, 1)]
    assert len(enumerate_words(3, 2, 2)) == 6
    perms = enumerate_words(3, 3, 3)
    assert len(perms) == 6 and perms[0] == (1, 2, 3)


def test_enumerate_guard():
    with pytest.raises(ResourceLimitError):
        enumerate_words(4, 1, 6, max_words=100)


@given(params())
@settings(max_examples=60, deadline=None)
def test_enumeration_is_sorted_complete_and_valid(p):
    d, t, n = p
    ws = enumerate_words(d, t, n)
    assert len(ws) == count_words(d, t, n)
    assert all(a < b for a, b in zip(ws, ws[1:]))
    assert all(is_t_constrained(w, t) and all(1 <= s <= d for s in w) for w in ws)


@given(params())
@settings(max_examples=60, deadline=None)
def test_rank_matches_enumeration_order(p):
    d, t, n = p
    for i, w in enumerate(iter_words(d, t, n)):
        assert rank(w, d, t) == i
        assert unrank(i, d, t, n) == w


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_unrank_rank_round_trip_on_large_spaces(data):
    d = data.draw(st.integers(2, 30))
    n = data.draw(st.integers(1, 30))
    t = data.draw(st.integers(1, min(d, n)))
    i = data.draw(st.integers(0, count_words(d, t, n) - 1))
    w = unrank(i, d, t, n)
    assert is_t_constrained(w, t)
    assert rank(w, d, t) == i


def test_round_trip_full_4_3_4():
    assert all(rank(unrank(k, 4, 3, 4), 4, 3) == k for k in range(48))
    assert rank((1, 2), 2, 2) == 0
    assert unrank(0, 3, 3, 3) == (1, 2, 3)


def test_rank_rejects_invalid():
    with pytest.raises(ParameterError):
        rank((1, 1), 2, 2)
    with pytest.raises(ParameterError):
        rank((1, 3), 2, 1)
    with pytest.raises(ParameterError):
        unrank(6, 3, 2, 2)
    with pytest.raises(ParameterError):
        unrank(-1, 3, 2, 2)


@given(params(max_d=5, max_n=5))
@settings(max_examples=40, deadline=None)
def test_containment_in_weaker_constraint(p):
    d, t, n = p
    if t < 2:
        return
    # strict: a word with a repeat at distance t-1 exists since n >= t >= 2
    assert set(iter_words(d, t, n)) < set(iter_words(d, t - 1, n))


@pytest.mark.parametrize("n", range(1, 7))
def test_full_constraint_gives_permutations(n):
    from itertools import permutations

    assert enumerate_words(n, n, n) == sorted(permutations(range(1, n + 1)))


def test_serialize_parse():
    assert serialize((2, 3, 1, 2)) == "2,3,1,2"
    assert parse(" 2,3,1,2\n") == (2, 3, 1, 2)
    for bad in ("", "1,,2", "a"):
        with pytest.raises(ParameterError):
            parse(bad)
