import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyrook.errors import InexactDivision
from polyrook.polynomial import IntPolynomial, poly

coeffs = st.lists(st.integers(-20, 20), max_size=6)


def test_trailing_zeros_stripped():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).degree == -1
    assert IntPolynomial([]) == IntPolynomial([0])


def test_str_format():
    assert str(poly([1, 7, 11, 4])) == "1+7t+11t^2+4t^3"
    assert str(IntPolynomial([0, -1, 1])) == "-t+t^2"
    assert str(IntPolynomial()) == "0"


def test_equality_with_lists():
    assert poly([1, 4, 1]) == [1, 4, 1]
    assert poly([1, 4, 1]) != [1, 4]


def test_getitem_out_of_range_is_zero():
    p = poly([3, 2])
    assert p[0] == 3 and p[5] == 0


def test_exact_division():
    # (1+4t+t^2)(1-t)^4 / (1-t)^4
    N = poly([1, 4, 1]) * IntPolynomial.one_minus_t_power(4)
    assert N.divide_one_minus_t(4) == [1, 4, 1]


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        poly([1, 1]).divide_one_minus_t(1)


def test_series_expansion():
    # 1/(1-t)^2 = 1 + 2t + 3t^2 + ...
    assert poly([1]).series(5, 2) == [1, 2, 3, 4, 5]
    assert poly([1, 1]).series(4, 3) == [1, 4, 9, 16]


def test_evaluation_and_palindrome():
    p = poly([1, 9, 18, 9, 1])
    assert p(1) == 38
    assert p.is_palindromic()
    assert not poly([1, 9, 21, 13, 1]).is_palindromic()


@given(coeffs, coeffs)
def test_ring_laws(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) - q == p
    for t in (-2, 0, 1, 3):
        assert (p * q)(t) == p(t) * q(t)


@given(coeffs, st.integers(0, 4))
def test_division_inverts_multiplication(a, k):
    p = IntPolynomial(a)
    assert (p * IntPolynomial.one_minus_t_power(k)).divide_one_minus_t(k) == p


@given(coeffs, st.integers(0, 5))
def test_shift(a, k):
    p = IntPolynomial(a)
    assert p.shift(k) == p * IntPolynomial.monomial(k)
