from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chen_ruan.exact_arith import (
    IntPolynomial,
    NonExactDivision,
    bernoulli,
    format_rational,
    parse_rational,
    poly_div_exact,
)


def recurrence_bernoulli(n):
    """Oracle: solve sum_{k<=m} C(m+1,k) B_k = 0 for B_m, one m at a time."""
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        bs.append(-sum(comb(m + 1, k) * bs[k] for k in range(m)) / (m + 1))
    return bs


def test_bernoulli_known_values():
    assert bernoulli(0) == 1
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(7) == 0


def test_bernoulli_matches_recurrence_up_to_40():
    oracle = recurrence_bernoulli(40)
    assert [bernoulli(n) for n in range(41)] == oracle


@pytest.mark.parametrize("n", range(1, 41))
def test_bernoulli_recurrence_holds(n):
    assert sum(comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


t = IntPolynomial([0, 1])
one = IntPolynomial([1])


def test_poly_div_examples():
    assert poly_div_exact(one - t**4, one - t**2) == one + t**2
    d = IntPolynomial([3, 0, -2, 5])
    assert poly_div_exact(d, d) == one
    num = (one + t**3) ** 4 - t**4 * (one + t) ** 4
    den = (one - t**2) * (one - t**4)
    assert poly_div_exact(num, den) == IntPolynomial([1, 0, 1, 4, 1, 0, 1])


def test_poly_div_non_exact():
    with pytest.raises(NonExactDivision):
        poly_div_exact(one + t**3, one + t**2)
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(one, IntPolynomial())


def test_zero_polynomial_degree_sentinel():
    assert IntPolynomial([0, 0]).degree == -1
    assert IntPolynomial([1, 2, 0]).degree == 1


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(IntPolynomial)


@given(rationals, rationals)
def test_rational_exactness(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@settings(max_examples=200)
@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
def test_div_exact_inverts_mul(q, d):
    assert poly_div_exact(q * d, d) == q
