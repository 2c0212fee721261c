from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from taumut.linalg import (
    QQ,
    Matrix,
    PrimeField,
    inverse,
    is_invertible,
    kernel_basis,
    parse_matrix,
    rank,
    rref,
    serialize_matrix,
    solve_all,
)

small = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_is_deterministic_and_reduced():
    m = [[2, 4, 6], [1, 2, 4]]
    rows, piv = rref(m)
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


def test_solve_and_kernel():
    m = Matrix.from_rows([[1, 1, 0], [0, 1, 1]])
    sols, ker = solve_all(m, [[2, 3]])
    x = sols[0]
    assert m.apply(x) == [2, 3]
    assert len(ker) == 1 and m.apply(ker[0]) == [0, 0]
    sols, _ = solve_all(Matrix.from_rows([[1, 0], [1, 0]]), [[1, 2]])
    assert sols[0] is None


def test_inverse_roundtrip():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert is_invertible(m)
    assert m @ inverse(m) == Matrix.identity(2)
    assert not is_invertible(Matrix.from_rows([[1, 2], [2, 4]]))


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(32001 * 3)


def test_serialization_roundtrip_with_fractions():
    m = Matrix.from_rows([[mpq(1, 2), 0], [-3, mpq(7, 5)]])
    text = serialize_matrix(m)
    assert parse_matrix(text) == m
    assert serialize_matrix(Matrix.zero(0, 2)) == "0x2:"


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_of_transpose(rows):
    m = Matrix.from_rows(rows)
    assert rank(m) == rank(m.T)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_prime_field_agrees_on_small_entries(rows):
    # minors are bounded by 5! * 3^5 < 32003, so no nonzero minor vanishes mod p
    assert rank(rows, QQ) == rank(rows, PrimeField(32003))


@given(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=6))
@settings(max_examples=40, deadline=None)
def test_scalar_serialization(values):
    m = Matrix.from_rows([[mpq(v.numerator, v.denominator) for v in values]])
    back = parse_matrix(serialize_matrix(m))
    assert [Fraction(int(x.numerator), int(x.denominator)) for x in back.data[0]] == values
