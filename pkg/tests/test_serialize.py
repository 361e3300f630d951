"""JSON round trips for exact scalars and matrices."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanian.halfint import half
from jordanian.hpoly import HPoly
from jordanian.polymatrix import PolyMatrix
from jordanian.radical import RadScalar
from jordanian.serialize import (matrix_from_json, matrix_to_json,
                                 scalar_from_json, scalar_to_json)


def test_scalar_round_trip_simple():
    p = HPoly.one() + HPoly.h(2, RadScalar.of(Fraction(-1, 2), 2))
    assert scalar_from_json(scalar_to_json(p)) == p
    assert scalar_from_json(scalar_to_json(HPoly.zero())) == HPoly.zero()
    assert scalar_to_json(HPoly.zero()) == []


def test_scalar_encoding_shape():
    p = HPoly.h(3, RadScalar.of(Fraction(5, 7), 6))
    (term,) = scalar_to_json(p)
    assert term == {"num": "5", "den": "7", "radicand": "6", "hpow": 3}


def test_scalar_round_trip_survives_json_text():
    p = HPoly.constant(RadScalar.sqrt(8)) + HPoly.h(1, Fraction(22, 7))
    text = json.dumps(scalar_to_json(p))
    assert scalar_from_json(json.loads(text)) == p


def test_big_integers_stay_exact():
    big = 10**40 + 1
    p = HPoly.constant(Fraction(big, big + 2))
    assert scalar_from_json(scalar_to_json(p)) == p
    text = json.dumps(scalar_to_json(p))
    assert str(big) in text  # carried as a string, not a float
    assert scalar_from_json(json.loads(text)) == p


def test_matrix_round_trip_with_weights():
    w = (half(1), half(-1))
    m = PolyMatrix([[HPoly.h(1), 1], [RadScalar.sqrt(2), 0]],
                   row_weights=w, col_weights=w)
    back = matrix_from_json(matrix_to_json(m))
    assert back == m
    assert back.row_weights == w and back.col_weights == w


def test_matrix_round_trip_without_weights():
    m = PolyMatrix([[1, 2, 3], [4, 5, 6]])
    obj = matrix_to_json(m)
    assert "row_weights" not in obj and "col_weights" not in obj
    back = matrix_from_json(obj)
    assert back == m and back.row_weights is None


def test_matrix_entry_count_validated():
    obj = matrix_to_json(PolyMatrix([[1, 2], [3, 4]]))
    obj["entries"] = obj["entries"][:3]
    with pytest.raises(ValueError):
        matrix_from_json(obj)


def test_half_integer_weights_round_trip():
    w = (half(3, 2), half(1, 2), half(-1, 2), half(-3, 2))
    m = PolyMatrix.identity(4, weights=w)
    back = matrix_from_json(matrix_to_json(m))
    assert back.row_weights == w


small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=9),
)

coefficients = st.tuples(
    small_rationals, st.sampled_from([1, 2, 3, 5, 6])).map(
        lambda t: RadScalar.of(*t))

polys = st.lists(coefficients, min_size=0, max_size=4).map(HPoly)


@settings(max_examples=60)
@given(polys)
def test_scalar_round_trip_property(p):
    assert scalar_from_json(json.loads(json.dumps(scalar_to_json(p)))) == p


@settings(max_examples=30)
@given(st.lists(st.lists(polys, min_size=2, max_size=2), min_size=2, max_size=2))
def test_matrix_round_trip_property(rows):
    m = PolyMatrix(rows)
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(m)))) == m
