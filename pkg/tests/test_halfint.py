"""Half-integer labels: arithmetic, ordering, and weight bookkeeping."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordanian.halfint import (HalfInt, as_half, casimir_eigenvalue, dim_of,
                               half, weight_index, weight_range)

twices = st.integers(min_value=-40, max_value=40)


def test_construction_equivalences():
    assert HalfInt(2) == HalfInt.from_twice(4)
    assert HalfInt(Fraction(3, 2)) == half(3, 2)
    assert HalfInt.parse("3/2") == half(3, 2)
    assert HalfInt.parse("-2") == HalfInt(-2)
    assert HalfInt.parse(" 1.5 ") == half(3, 2)
    assert as_half("5/2") == half(5, 2)
    assert as_half(half(5, 2)) is not None


def test_rejects_non_half_integers():
    with pytest.raises(ValueError):
        HalfInt(Fraction(1, 3))
    with pytest.raises(ValueError):
        half(1, 3)


def test_arithmetic_and_ordering():
    assert half(1, 2) + half(1, 2) == HalfInt(1)
    assert half(3, 2) - 2 == half(-1, 2)
    assert -half(1, 2) == half(-1, 2)
    assert abs(half(-3, 2)) == half(3, 2)
    assert half(1, 2) < 1 < half(3, 2)
    assert sorted([HalfInt(1), half(1, 2), HalfInt(0)])[0] == HalfInt(0)


def test_hash_agrees_with_integers():
    # Integer-valued labels must be usable interchangeably with ints as
    # dictionary keys.
    d = {HalfInt(1): "a"}
    assert d[1] == "a"
    assert hash(half(1, 2)) == hash(Fraction(1, 2))


def test_str_forms():
    assert str(half(3, 2)) == "3/2"
    assert str(HalfInt(-2)) == "-2"
    assert str(half(-1, 2)) == "-1/2"


def test_integer_views():
    assert half(4, 2).as_int() == 2
    assert HalfInt(3).is_integer
    assert not half(1, 2).is_integer
    with pytest.raises(ValueError):
        half(1, 2).as_int()


def test_weight_bookkeeping():
    assert dim_of(half(3, 2)) == 4
    assert weight_range(HalfInt(1)) == (HalfInt(1), HalfInt(0), HalfInt(-1))
    ws = weight_range(half(3, 2))
    assert ws[0] == half(3, 2) and ws[-1] == half(-3, 2)
    for i, m in enumerate(ws):
        assert weight_index(half(3, 2), m) == i
    with pytest.raises(ValueError):
        dim_of(half(-1, 2))
    with pytest.raises(ValueError):
        weight_index(HalfInt(1), half(1, 2))  # wrong parity
    with pytest.raises(ValueError):
        weight_index(HalfInt(1), HalfInt(2))  # out of range


def test_casimir_eigenvalue_values():
    assert casimir_eigenvalue(HalfInt(0)) == 0
    assert casimir_eigenvalue(half(1, 2)) == Fraction(3, 4)
    assert casimir_eigenvalue(HalfInt(1)) == 2
    assert casimir_eigenvalue(half(3, 2)) == Fraction(15, 4)


@given(twices, twices)
def test_addition_matches_fractions(a, b):
    x, y = HalfInt.from_twice(a), HalfInt.from_twice(b)
    assert (x + y).as_fraction() == x.as_fraction() + y.as_fraction()
    assert (x - y).as_fraction() == x.as_fraction() - y.as_fraction()


@given(twices, twices)
def test_ordering_matches_fractions(a, b):
    x, y = HalfInt.from_twice(a), HalfInt.from_twice(b)
    assert (x < y) == (x.as_fraction() < y.as_fraction())
    assert (x == y) == (a == b)


@given(twices)
def test_weight_index_roundtrip(t):
    j = HalfInt.from_twice(abs(t))
    for m in weight_range(j):
        idx = weight_index(j, m)
        assert weight_range(j)[idx] == m
