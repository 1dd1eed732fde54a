"""Exact rational helpers: Bernoulli numbers and dense univariate polynomials.

Rationals are plain :class:`fractions.Fraction` values throughout the package.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "bernoulli",
    "IntPolynomial",
    "NonExactDivision",
    "poly_div_exact",
    "format_rational",
    "parse_rational",
]


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


@lru_cache(maxsize=None)
def _bernoulli_plus(n: int) -> Fraction:
    # Akiyama-Tanigawa; yields B_1 = +1/2
    a = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(1, n + 1):
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def bernoulli(n: int) -> Fraction:
    """Return B_n with B_1 = -1/2 (so B_2 = 1/6, B_4 = -1/30)."""
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    return _bernoulli_plus(n)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly; decimals are rejected."""
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class IntPolynomial:
    """Dense polynomial in ``t`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``. Trailing zeros are stripped,
    and the zero polynomial has degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({[format_rational(c) for c in self.coeffs]})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return IntPolynomial(c * Fraction(other) for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def as_ints(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return out


def poly_divmod(num: IntPolynomial, den: IntPolynomial):
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.coeffs[-1]
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - dd] = c
            for j, b in enumerate(den.coeffs):
                rem[k - dd + j] -= c * b
    return IntPolynomial(quot), IntPolynomial(rem)


def poly_div_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``num == q * den``; raise :class:`NonExactDivision` otherwise."""
    q, r = poly_divmod(num, den)
    if not r.is_zero():
        raise NonExactDivision(f"remainder {r!r} dividing {num!r} by {den!r}")
    return q


def binomial_row(n: int) -> Sequence[int]:
    return [comb(n, k) for k in range(n + 1)]
