"""Even exterior algebra on W0 = Q^{2(g-1)}, the model for each twisted sector.

Generators are ``e1, f1, ..., e_{g-1}, f_{g-1}``; a monomial is a bitmask with
``e_i`` at bit ``2(i-1)`` and ``f_i`` at bit ``2(i-1)+1``, and its canonical
form lists generators by ascending bit index.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .gamma import GenusMismatch

__all__ = [
    "ExteriorClass",
    "wedge",
    "wedge_sign",
    "theta_bar",
    "kappa_pullback_power",
    "integrate_orb",
    "top_mask",
    "even_masks",
    "monomial_str",
    "parse_monomial",
]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def top_mask(g: int) -> int:
    return (1 << (2 * (g - 1))) - 1


def wedge_sign(a: int, b: int) -> int:
    """Sign of ``mono(a) ^ mono(b)`` relative to ``mono(a | b)``; 0 if they share a generator."""
    if a & b:
        return 0
    # count pairs (x in a, y in b) with x > y
    inversions = 0
    while b:
        low = b & -b
        inversions += popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if inversions & 1 else 1


def even_masks(g: int, degree: int | None = None) -> list[int]:
    """Even-degree monomials, ordered by (degree, mask)."""
    n = 2 * (g - 1)
    masks = [m for m in range(1 << n) if popcount(m) % 2 == 0]
    if degree is not None:
        masks = [m for m in masks if popcount(m) == degree]
    return sorted(masks, key=lambda m: (popcount(m), m))


def _gen_name(bit: int) -> str:
    return ("e", "f")[bit & 1] + str(bit // 2 + 1)


def monomial_str(mask: int) -> str:
    if mask == 0:
        return "1"
    return ".".join(_gen_name(b) for b in range(mask.bit_length()) if mask >> b & 1)


def parse_monomial(text: str, g: int) -> tuple[int, int]:
    """Parse ``"e1.f1"`` style text. Returns ``(sign, mask)``; sign 0 on a repeated generator."""
    text = text.strip()
    if text == "1":
        return 1, 0
    sign, mask = 1, 0
    for tok in text.split("."):
        tok = tok.strip()
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
            raise ValueError(f"bad generator {tok!r}")
        idx = int(tok[1:])
        if not 1 <= idx <= g - 1:
            raise ValueError(f"generator index {idx} out of range 1..{g - 1}")
        bit = 1 << (2 * (idx - 1) + (tok[0] == "f"))
        s = wedge_sign(mask, bit)
        if s == 0:
            return 0, 0
        sign *= s
        mask |= bit
    return sign, mask


class ExteriorClass:
    """Element of the exterior algebra: sparse ``{mask: coefficient}``.

    Treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms: Mapping[int, Fraction] | Iterable = ()):
        self.g = g
        items = terms.items() if isinstance(terms, Mapping) else terms
        limit = 1 << (2 * (g - 1))
        clean = {}
        for mask, c in items:
            if not 0 <= mask < limit:
                raise ValueError(f"monomial mask {mask} out of range for genus {g}")
            c = Fraction(c)
            if c:
                clean[mask] = clean.get(mask, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def one(cls, g: int, c=1) -> "ExteriorClass":
        return cls(g, {0: c})

    @classmethod
    def top(cls, g: int, c=1) -> "ExteriorClass":
        return cls(g, {top_mask(g): c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_even(self) -> bool:
        return all(popcount(m) % 2 == 0 for m in self.terms)

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    def _same(self, other: "ExteriorClass"):
        if self.g != other.g:
            raise GenusMismatch(f"exterior classes of genus {self.g} and {other.g}")

    def __add__(self, other: "ExteriorClass") -> "ExteriorClass":
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ExteriorClass(self.g, out)

    def __neg__(self):
        return ExteriorClass(self.g, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExteriorClass":
        c = Fraction(c)
        return ExteriorClass(self.g, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, ExteriorClass):
            return self.g == other.g and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return f"ExteriorClass(g={self.g}, 0)"
        body = " + ".join(f"{c}*{monomial_str(m)}" for m, c in sorted(self.terms.items()))
        return f"ExteriorClass(g={self.g}, {body})"


def wedge(a: ExteriorClass, b: ExteriorClass) -> ExteriorClass:
    a._same(b)
    out: dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            s = wedge_sign(ma, mb)
            if s:
                m = ma | mb
                out[m] = out.get(m, Fraction(0)) + s * ca * cb
    return ExteriorClass(a.g, out)


def theta_bar(g: int) -> ExteriorClass:
    """The symplectic class sum_i e_i ^ f_i."""
    return ExteriorClass(g, {3 << (2 * i): 1 for i in range(g - 1)})


def kappa_pullback_power(g: int, m: int) -> ExteriorClass:
    """Restriction of kappa**m to a twisted sector, i.e. (2 * theta_bar)**m.

    Computed in closed form: theta_bar**m is m! times the sum of all products
    of m distinct symplectic pairs.
    """
    if m < 0:
        raise ValueError("power must be nonnegative")
    n = g - 1
    if m > n:
        return ExteriorClass(g, {})
    coeff = Fraction(2**m * factorial(m))
    out = {}
    for pairs in range(1 << n):
        if popcount(pairs) == m:
            mask = 0
            for i in range(n):
                if pairs >> i & 1:
                    mask |= 3 << (2 * i)
            out[mask] = coeff
    return ExteriorClass(g, out)


def integrate_orb(a: ExteriorClass) -> Fraction:
    """Orbifold integral over a twisted sector: the top-monomial coefficient."""
    return a.terms.get(top_mask(a.g), Fraction(0))
