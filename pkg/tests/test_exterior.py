import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chen_ruan.exterior import (
    ExteriorClass,
    even_masks,
    integrate_orb,
    kappa_pullback_power,
    monomial_str,
    parse_monomial,
    theta_bar,
    top_mask,
    wedge,
)
from chen_ruan.gamma import GenusMismatch
from chen_ruan.sectors import sector_betti
from chen_ruan.verify import rational_rank


def _bits(mask):
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def oracle_wedge(a, b):
    """Concatenate generator lists and bubble-sort, counting swaps."""
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            seq = _bits(ma) + _bits(mb)
            if len(set(seq)) < len(seq):
                continue
            swaps = 0
            for i in range(len(seq)):
                for j in range(len(seq) - 1 - i):
                    if seq[j] > seq[j + 1]:
                        seq[j], seq[j + 1] = seq[j + 1], seq[j]
                        swaps += 1
            m = ma | mb
            out[m] = out.get(m, 0) + (-1) ** swaps * ca * cb
    return ExteriorClass(a.g, out)


def mono(g, text, c=1):
    s, m = parse_monomial(text, g)
    return ExteriorClass(g, {m: s * c})


def test_wedge_examples():
    x = mono(3, "e1.f2") + mono(3, "e2", 3)
    assert wedge(ExteriorClass.one(3), x) == x
    ef = mono(2, "e1.f1")
    assert wedge(ef, ef).is_zero()
    prod = wedge(mono(3, "e1.f1"), mono(3, "e2.f2"))
    assert prod.terms == {0b1111: 1}


def test_wedge_genus_mismatch():
    with pytest.raises(GenusMismatch):
        wedge(ExteriorClass.one(2), ExteriorClass.one(3))


def test_anticommuting_generators():
    assert wedge(mono(3, "f1"), mono(3, "e1")) == -wedge(mono(3, "e1"), mono(3, "f1"))


def exterior_classes(g, even=False):
    n = 2 * (g - 1)
    masks = [m for m in range(1 << n) if not even or bin(m).count("1") % 2 == 0]
    return st.dictionaries(
        st.sampled_from(masks), st.fractions(max_denominator=6).filter(lambda q: abs(q) < 20), max_size=4
    ).map(lambda d: ExteriorClass(g, d))


@settings(max_examples=150)
@given(exterior_classes(4), exterior_classes(4))
def test_wedge_matches_oracle(a, b):
    assert wedge(a, b) == oracle_wedge(a, b)


@settings(max_examples=100)
@given(exterior_classes(4), exterior_classes(4), exterior_classes(4))
def test_wedge_associative_unital(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(ExteriorClass.one(4), a) == a == wedge(a, ExteriorClass.one(4))


@settings(max_examples=100)
@given(exterior_classes(4, even=True), exterior_classes(4))
def test_even_classes_are_central(a, b):
    assert wedge(a, b) == wedge(b, a)


def test_theta_bar():
    assert theta_bar(2) == mono(2, "e1.f1")
    assert theta_bar(3) == mono(3, "e1.f1") + mono(3, "e2.f2")


@pytest.mark.parametrize("g", range(2, 7))
def test_theta_power_top(g):
    p = ExteriorClass.one(g)
    for _ in range(g - 1):
        p = oracle_wedge(p, theta_bar(g))
    assert p == ExteriorClass.top(g, factorial(g - 1))


@pytest.mark.parametrize("g", range(2, 6))
def test_kappa_pullback_power_matches_repeated_wedge(g):
    two_theta = theta_bar(g).scale(2)
    p = ExteriorClass.one(g)
    for m in range(g + 2):
        assert kappa_pullback_power(g, m) == p
        p = wedge(p, two_theta)


def test_kappa_pullback_examples():
    assert kappa_pullback_power(2, 1) == mono(2, "e1.f1", 2)
    assert kappa_pullback_power(5, 0) == ExteriorClass.one(5)
    assert kappa_pullback_power(2, 2).is_zero()


@pytest.mark.parametrize("g", range(2, 8))
def test_integral_of_top_kappa_power(g):
    assert integrate_orb(kappa_pullback_power(g, g - 1)) == 2 ** (g - 1) * factorial(g - 1)


def test_integrate_orb():
    assert integrate_orb(ExteriorClass.top(3)) == 1
    assert integrate_orb(ExteriorClass.one(2)) == 0
    assert integrate_orb(ExteriorClass.top(3, 5) + mono(3, "e1.f1")) == 5


@pytest.mark.parametrize("g", [2, 3, 4])
def test_sector_poincare_duality(g):
    for i in range(0, 2 * g - 1, 2):
        rows_b = even_masks(g, i)
        cols_b = even_masks(g, 2 * g - 2 - i)
        rows = []
        for r in rows_b:
            row = {}
            for j, c in enumerate(cols_b):
                val = integrate_orb(wedge(ExteriorClass(g, {r: 1}), ExteriorClass(g, {c: 1})))
                if val:
                    row[j] = val
            rows.append(row)
        assert len(rows_b) == sector_betti(g, i)
        assert rational_rank(rows) == sector_betti(g, i)


def test_monomial_text():
    assert monomial_str(0) == "1"
    assert monomial_str(top_mask(3)) == "e1.f1.e2.f2"
    assert parse_monomial("f1.e1", 2) == (-1, 0b11)
    assert parse_monomial("e1.e1", 2)[0] == 0
    with pytest.raises(ValueError):
        parse_monomial("e2", 2)
    for mask in range(16):
        assert parse_monomial(monomial_str(mask), 3) == (1, mask)


def test_coefficients_exact():
    a = ExteriorClass(2, {0: Fraction(1, 3)})
    assert (a + a + a).terms == {0: 1}
    assert (a - a).is_zero()
