"""Per-sector numerology: ages, sector Betti numbers, obstruction ranks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gamma import GenusMismatch, Relation, TwoTorsionLabel, fixed_locus_relation

__all__ = [
    "EigenvalueData",
    "SectorDescriptor",
    "degree_shift",
    "eigen_data_for",
    "sector_betti",
    "sector_betti_table",
    "sector_descriptor",
    "obstruction_rank",
    "EmptyIntersection",
]


class EmptyIntersection(ValueError):
    """The common fixed locus of a triple is empty, so no obstruction rank exists."""


@dataclass(frozen=True)
class EigenvalueData:
    """Eigenvalues ``exp(2*pi*i*a)`` of a group element on the tangent space,
    as pairs ``(a, multiplicity)`` with ``0 <= a < 1``."""

    entries: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        for a, m in self.entries:
            if not 0 <= a < 1 or m <= 0:
                raise ValueError(f"bad eigenvalue entry ({a}, {m})")

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)


def degree_shift(data: EigenvalueData) -> Fraction:
    return sum((Fraction(a) * m for a, m in data.entries), Fraction(0))


def eigen_data_for(label: TwoTorsionLabel) -> EigenvalueData:
    g = label.genus
    if label.is_zero():
        return EigenvalueData(((Fraction(0), 3 * g - 3),))
    # +1 with multiplicity g-1 (tangent to the fixed locus), -1 with 2(g-1)
    return EigenvalueData(((Fraction(0), g - 1), (Fraction(1, 2), 2 * (g - 1))))


def sector_betti(g: int, i: int) -> int:
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    if i < 0 or i % 2 or i > 2 * g - 2:
        return 0
    return comb(2 * g - 2, i)


def sector_betti_table(g: int) -> dict[int, int]:
    return {i: sector_betti(g, i) for i in range(2 * g - 1)}


@dataclass(frozen=True)
class SectorDescriptor:
    label: TwoTorsionLabel
    shift: Fraction
    fixed_locus_complex_dim: int
    covering_genus: int
    prym_dim: int
    w0_dim: int

    def as_dict(self) -> dict:
        return {
            "label": str(self.label),
            "shift": str(self.shift),
            "fixed_locus_complex_dim": self.fixed_locus_complex_dim,
            "covering_genus": self.covering_genus,
            "prym_dim": self.prym_dim,
            "w0_dim": self.w0_dim,
            "betti": [sector_betti(self.label.genus, i) for i in range(2 * self.fixed_locus_complex_dim + 1)],
        }


def sector_descriptor(label: TwoTorsionLabel) -> SectorDescriptor:
    g = label.genus
    data = eigen_data_for(label)
    return SectorDescriptor(
        label=label,
        shift=degree_shift(data),
        fixed_locus_complex_dim=data.entries[0][1],
        covering_genus=2 * g - 1,
        prym_dim=g - 1,
        w0_dim=2 * (g - 1),
    )


def _triple_locus_dim(labels) -> int:
    g = labels[0].genus
    twisted = sorted({x for x in labels if not x.is_zero()})
    if not twisted:
        return 3 * g - 3
    if len(twisted) == 1:
        return g - 1
    rel = fixed_locus_relation(twisted[0], twisted[1])
    if rel.relation is Relation.DISJOINT:
        raise EmptyIntersection(f"fixed loci of {twisted[0]} and {twisted[1]} do not meet")
    # with L3 = L1 + L2 the third locus adds no further condition
    return 0


def obstruction_rank(l1: TwoTorsionLabel, l2: TwoTorsionLabel, l3: TwoTorsionLabel) -> int:
    """Complex rank of the obstruction bundle on the common fixed locus.

    dim S - dim M + sum of the three degree shifts, with ``l3 = l1 + l2``.
    """
    if not l1.genus == l2.genus == l3.genus:
        raise GenusMismatch("labels of different genus")
    if (l1 ^ l2) != l3:
        raise ValueError(f"{l3} is not the sum of {l1} and {l2}")
    g = l1.genus
    shifts = sum(degree_shift(eigen_data_for(x)) for x in (l1, l2, l3))
    rank = _triple_locus_dim((l1, l2, l3)) - (3 * g - 3) + shifts
    assert rank.denominator == 1 and rank >= 0, rank
    return int(rank)
