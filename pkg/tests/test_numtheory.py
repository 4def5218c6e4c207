import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omegapoly import (
    NonBinaryDigit,
    d_support,
    d_transform,
    enumerate_Mb,
    is_in_Mb,
    starred_multinomial,
    to_digit_vector,
)
from omegapoly.numtheory import DigitVector, multinomial
from oracles import brute_multinomial, d2, digits_01


@pytest.mark.parametrize("k, b, expected", [(5, 3, False), (0, 7, True), (10, 3, True), (2, 3, False), (7, 2, True)])
def test_is_in_Mb(k, b, expected):
    assert is_in_Mb(k, b) is expected


def test_bad_base():
    with pytest.raises(ValueError):
        is_in_Mb(3, 1)
    with pytest.raises(ValueError):
        enumerate_Mb(3, 0)


@pytest.mark.parametrize("k, b, digits", [(4, 3, (1, 1)), (0, 2, ()), (9, 3, (0, 0, 1)), (6, 2, (0, 1, 1))])
def test_to_digit_vector(k, b, digits):
    dv = to_digit_vector(k, b)
    assert dv == DigitVector(digits, b)
    assert dv.value == k


def test_to_digit_vector_rejects_non_binary():
    with pytest.raises(NonBinaryDigit):
        to_digit_vector(5, 3)
    with pytest.raises(NonBinaryDigit):
        d_transform(2, 3, 5)


def test_d_transform_examples():
    # 4 = 1 + 3 in base 3, so d_s(4) = 1 + s
    assert d_transform(4, 3, 7) == 1 + 7
    assert d_transform(0, 5, 9) == 0
    assert d_transform(11, 2, 3) == 1 + 3 + 27


@pytest.mark.parametrize("k, b, support", [(4, 3, {0, 1}), (0, 2, set()), (9, 3, {2})])
def test_d_support(k, b, support):
    assert d_support(k, b) == support


@pytest.mark.parametrize("b", [2, 3, 4, 5, 10])
def test_d_transform_identity_and_weight(b):
    for k in enumerate_Mb(2000, b):
        assert d_transform(k, b, b) == k
        assert d_transform(k, b, 1) == len(d_support(k, b))
        assert d_transform(k, b, 2) == d2(k, b)


def test_starred_multinomial_examples():
    assert multinomial((4, 2, 1)) == 105
    assert starred_multinomial((4, 2, 1), 2) == 1
    assert starred_multinomial((13, 0, 0), 2) == 1
    assert starred_multinomial((1, 1), 2) == 0
    with pytest.raises(NonBinaryDigit):
        starred_multinomial((1, 2), 3)


@pytest.mark.parametrize("b", [2, 3, 4])
def test_starred_multinomial_exhaustive(b):
    # every tuple of length <= 4 whose transplanted entries sum to <= 20
    members = [k for k in enumerate_Mb(10**4, b) if d2(k, b) <= 20]
    checked = 0
    for length in range(1, 5):
        for ks in itertools.product(members, repeat=length):
            lower = [d2(k, b) for k in ks]
            if sum(lower) > 20:
                continue
            assert starred_multinomial(ks, b) == brute_multinomial(lower) % 2, ks
            checked += 1
    assert checked > 100


@pytest.mark.parametrize("bound, b", [(10, 3), (0, 4), (100, 2), (200, 5), (1000, 3)])
def test_enumerate_Mb_matches_filter(bound, b):
    assert enumerate_Mb(bound, b) == [k for k in range(bound + 1) if digits_01(k, b)]


def test_enumerate_Mb_examples():
    assert enumerate_Mb(10, 3) == [0, 1, 3, 4, 9, 10]
    assert enumerate_Mb(12, 2) == list(range(13))
    assert enumerate_Mb(0, 6) == [0]


@given(st.integers(2, 6), st.integers(0, 255), st.integers(0, 255), st.integers(2, 9))
def test_d_transform_monotone_in_support(b, x, y, t):
    small = d_transform(x & y, 2, b)
    big = d_transform(x | y, 2, b)
    assert d_support(small, b) <= d_support(big, b)
    assert d_transform(small, b, t) <= d_transform(big, b, t)
