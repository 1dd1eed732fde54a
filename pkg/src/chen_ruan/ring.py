"""The Chen-Ruan ring of M_xi / Gamma: classes, product, pairing, constants.

The untwisted sector is represented by the kappa line Q[k]/(k^{3g-2}); each
nontrivial label carries an even exterior class (see :mod:`.exterior`).
CR degrees: ``k^m`` has degree ``2m``; a sector monomial of internal degree
``i`` has degree ``i + 2(g-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping

from .exact_arith import IntPolynomial, bernoulli, poly_div_exact
from .exterior import (
    ExteriorClass,
    even_masks,
    integrate_orb,
    kappa_pullback_power,
    popcount,
    top_mask,
    wedge,
)
from .gamma import GenusMismatch, TwoTorsionLabel, enumerate_labels, weil_pairing

__all__ = [
    "IntersectionConstants",
    "constants",
    "untwisted_poincare",
    "twisted_poincare",
    "cr_poincare",
    "CRClass",
    "UnsupportedClass",
    "product",
    "poincare_pair",
    "three_point",
    "BasisElement",
    "canonical_basis",
]


class UnsupportedClass(ValueError):
    """Untwisted content outside the kappa subalgebra."""


@dataclass(frozen=True)
class IntersectionConstants:
    g: int
    thaddeus_number: Fraction  # integral of H([X])^{3g-3} over M_xi
    v: Fraction  # integral of kappa^{3g-3} over M_xi / Gamma


@lru_cache(maxsize=None)
def constants(g: int) -> IntersectionConstants:
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    n = 2 * g - 2
    th = Fraction(factorial(3 * g - 3), factorial(n)) * 2**n * (2**n - 2) * abs(bernoulli(n))
    return IntersectionConstants(g, th, th / 2 ** (2 * g))


def untwisted_poincare(g: int) -> IntPolynomial:
    """Poincare polynomial of M_xi: ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4))."""
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    one = IntPolynomial([1])
    t = IntPolynomial([0, 1])
    num = (one + t**3) ** (2 * g) - t ** (2 * g) * (one + t) ** (2 * g)
    den = (one - t**2) * (one - t**4)
    return poly_div_exact(num, den)


def twisted_poincare(g: int) -> IntPolynomial:
    """Poincare polynomial of one twisted sector in internal degrees."""
    return IntPolynomial([comb(2 * g - 2, i) if i % 2 == 0 else 0 for i in range(2 * g - 1)])


def cr_poincare(g: int) -> IntPolynomial:
    shift = IntPolynomial.monomial(2 * g - 2)
    return untwisted_poincare(g) + (2 ** (2 * g) - 1) * shift * twisted_poincare(g)


def _label_key(label) -> tuple:
    return (label.genus, label.bits)


class CRClass:
    """A Chen-Ruan class: kappa polynomial plus per-sector exterior classes.

    ``kappa`` has length ``3g-2`` (coefficients of k^0 .. k^{3g-3}); ``twisted``
    maps nonzero labels to nonzero even :class:`ExteriorClass` values.
    """

    __slots__ = ("g", "kappa", "twisted")

    def __init__(self, g: int, kappa: Iterable = (), twisted: Mapping | None = None):
        self.g = g
        ks = [Fraction(c) for c in kappa]
        if len(ks) > 3 * g - 2:
            if any(ks[3 * g - 2:]):
                raise ValueError(f"kappa power above {3 * g - 3} for genus {g}")
            ks = ks[: 3 * g - 2]
        self.kappa = tuple(ks + [Fraction(0)] * (3 * g - 2 - len(ks)))
        tw = {}
        for label, ext in (twisted or {}).items():
            if label.genus != g or ext.g != g:
                raise GenusMismatch("sector part of wrong genus")
            if label.is_zero():
                raise UnsupportedClass("use the kappa part for the untwisted sector")
            if not ext.is_even():
                raise ValueError(f"odd-degree sector class in sector {label}")
            if not ext.is_zero():
                tw[label] = tw[label] + ext if label in tw else ext
        self.twisted = {k: v for k, v in sorted(tw.items(), key=lambda kv: kv[0].bits) if not v.is_zero()}

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, g: int) -> "CRClass":
        return cls(g)

    @classmethod
    def kappa_power(cls, g: int, m: int, c=1) -> "CRClass":
        if m < 0:
            raise ValueError("negative kappa power")
        if m > 3 * g - 3:
            return cls(g)
        ks = [0] * (3 * g - 2)
        ks[m] = c
        return cls(g, ks)

    @classmethod
    def unit(cls, g: int) -> "CRClass":
        return cls.kappa_power(g, 0)

    @classmethod
    def sector(cls, label: TwoTorsionLabel, mask: int = 0, c=1) -> "CRClass":
        g = label.genus
        if label.is_zero():
            if mask:
                raise UnsupportedClass("untwisted classes are restricted to powers of kappa")
            return cls.kappa_power(g, 0, c)
        return cls(g, twisted={label: ExteriorClass(g, {mask: c})})

    @classmethod
    def sector_class(cls, label: TwoTorsionLabel, ext: ExteriorClass) -> "CRClass":
        return cls(label.genus, twisted={label: ext})

    # -- linear structure ---------------------------------------------------
    def _same(self, other: "CRClass"):
        if self.g != other.g:
            raise GenusMismatch(f"classes of genus {self.g} and {other.g}")

    def __add__(self, other: "CRClass") -> "CRClass":
        self._same(other)
        tw = dict(self.twisted)
        for k, v in other.twisted.items():
            tw[k] = tw[k] + v if k in tw else v
        return CRClass(self.g, (a + b for a, b in zip(self.kappa, other.kappa)), tw)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CRClass":
        c = Fraction(c)
        return CRClass(self.g, (c * a for a in self.kappa), {k: v.scale(c) for k, v in self.twisted.items()})

    def __mul__(self, other):
        if isinstance(other, CRClass):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return not any(self.kappa) and not self.twisted

    def __eq__(self, other):
        if isinstance(other, CRClass):
            return self.g == other.g and self.kappa == other.kappa and self.twisted == other.twisted
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        from .expr import format_class

        return f"CRClass(g={self.g}, {format_class(self)})"

    # -- grading ------------------------------------------------------------
    def degrees(self) -> set[int]:
        out = {2 * m for m, c in enumerate(self.kappa) if c}
        shift = 2 * (self.g - 1)
        for ext in self.twisted.values():
            out |= {d + shift for d in ext.degrees()}
        return out

    def degree(self) -> int | None:
        """CR degree if homogeneous and nonzero, else None."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def homogeneous_parts(self):
        """Yield ``(label_or_None, piece)`` with pieces that are single-degree, single-sector.

        ``label`` is None for a kappa term, whose piece is ``(m, coeff)``;
        otherwise the piece is an :class:`ExteriorClass` of one degree.
        """
        for m, c in enumerate(self.kappa):
            if c:
                yield None, (m, c)
        for label, ext in self.twisted.items():
            by_deg: dict[int, dict] = {}
            for mask, c in ext.terms.items():
                by_deg.setdefault(popcount(mask), {})[mask] = c
            for d in sorted(by_deg):
                yield label, ExteriorClass(self.g, by_deg[d])


# -- product ----------------------------------------------------------------

def _twisted_times_twisted(g, l1, a1: ExteriorClass, l2, a2: ExteriorClass) -> CRClass:
    shift = 2 * (g - 1)
    if l1 == l2:
        # both in the same sector: result lands on the kappa line
        i1 = popcount(next(iter(a1.terms)))
        i2 = popcount(next(iter(a2.terms)))
        half = (i1 + i2 + 2 * shift) // 2
        m0 = 3 * (g - 1) - half
        if m0 < 0:
            return CRClass.zero(g)
        c = integrate_orb(wedge(wedge(a1, a2), kappa_pullback_power(g, m0)))
        return CRClass.kappa_power(g, half, c / constants(g).v)
    if not weil_pairing(l1, l2):
        return CRClass.zero(g)
    s1 = a1.terms.get(0)
    s2 = a2.terms.get(0)
    if s1 is None or s2 is None or len(a1.terms) != 1 or len(a2.terms) != 1:
        return CRClass.zero(g)
    return CRClass.sector(l1 ^ l2, top_mask(g), s1 * s2 / 4)


def _piece_product(g, la, pa, lb, pb) -> CRClass:
    if la is None and lb is None:
        (m, c), (n, d) = pa, pb
        return CRClass.kappa_power(g, m + n, c * d)
    if la is None:
        m, c = pa
        return CRClass.sector_class(lb, wedge(kappa_pullback_power(g, m), pb).scale(c))
    if lb is None:
        n, d = pb
        return CRClass.sector_class(la, wedge(pa, kappa_pullback_power(g, n)).scale(d))
    return _twisted_times_twisted(g, la, pa, lb, pb)


def product(a: CRClass, b: CRClass) -> CRClass:
    """Chen-Ruan product, extended bilinearly over homogeneous sector pieces."""
    a._same(b)
    g = a.g
    out = CRClass.zero(g)
    bparts = list(b.homogeneous_parts())
    for la, pa in a.homogeneous_parts():
        for lb, pb in bparts:
            out = out + _piece_product(g, la, pa, lb, pb)
    return out


def poincare_pair(a: CRClass, b: CRClass) -> Fraction:
    a._same(b)
    g = a.g
    top = 3 * g - 3
    total = constants(g).v * sum((a.kappa[m] * b.kappa[top - m] for m in range(top + 1)), Fraction(0))
    for label, ext in a.twisted.items():
        other = b.twisted.get(label)
        if other is not None:
            total += integrate_orb(wedge(ext, other))
    return total


def three_point(a: CRClass, b: CRClass, c: CRClass) -> Fraction:
    return poincare_pair(product(a, b), c)


# -- canonical basis --------------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    label: TwoTorsionLabel
    mask: int  # kappa power when label is zero, else exterior monomial
    degree: int

    def to_class(self) -> CRClass:
        if self.label.is_zero():
            return CRClass.kappa_power(self.label.genus, self.mask)
        return CRClass.sector(self.label, self.mask)

    @property
    def is_kappa(self) -> bool:
        return self.label.is_zero()


@lru_cache(maxsize=None)
def canonical_basis(g: int) -> tuple[BasisElement, ...]:
    """kappa^0..kappa^{3g-3}, then even monomials of each nonzero label in label order."""
    labels = enumerate_labels(g)
    out = [BasisElement(labels[0], m, 2 * m) for m in range(3 * g - 2)]
    masks = even_masks(g)
    for label in labels[1:]:
        out.extend(BasisElement(label, mk, popcount(mk) + 2 * (g - 1)) for mk in masks)
    return tuple(out)


def coordinates(x: CRClass) -> dict[int, Fraction]:
    """Sparse coordinates of ``x`` in :func:`canonical_basis`."""
    g = x.g
    index = _basis_index(g)
    out = {}
    for m, c in enumerate(x.kappa):
        if c:
            out[m] = c
    for label, ext in x.twisted.items():
        for mask, c in ext.terms.items():
            out[index[(label.bits, mask)]] = c
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def _basis_index(g: int) -> dict[tuple[int, int], int]:
    return {(b.label.bits, b.mask): i for i, b in enumerate(canonical_basis(g)) if not b.is_kappa}


def from_coordinates(g: int, coords: Mapping[int, Fraction]) -> CRClass:
    basis = canonical_basis(g)
    out = CRClass.zero(g)
    for i, c in coords.items():
        out = out + basis[i].to_class().scale(c)
    return out
