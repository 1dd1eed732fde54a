"""The 2-torsion group as F_2^{2g} with its standard symplectic (Weil) pairing.

A label is a bit-vector over coordinates ``a1, b1, ..., ag, bg``. Its text
form is a bitstring with ``a1`` leftmost; ``"O"`` names the zero label.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

__all__ = [
    "TwoTorsionLabel",
    "GenusMismatch",
    "Relation",
    "FixedLocusRelation",
    "weil_pairing",
    "fixed_locus_relation",
    "enumerate_labels",
    "ENUMERATION_CAP_BITS",
]

# refuse to enumerate more than 2**ENUMERATION_CAP_BITS labels
ENUMERATION_CAP_BITS = 20


class GenusMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TwoTorsionLabel:
    """Element of F_2^{2g}.

    ``bits`` is the integer whose binary expansion, padded to ``2g`` digits,
    is the bitstring (so string position 0, coordinate ``a1``, is the most
    significant bit).
    """

    genus: int
    bits: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be >= 2, got {self.genus}")
        if not 0 <= self.bits < (1 << (2 * self.genus)):
            raise ValueError(f"label bits {self.bits} out of range for genus {self.genus}")

    @classmethod
    def zero(cls, genus: int) -> "TwoTorsionLabel":
        return cls(genus, 0)

    @classmethod
    def parse(cls, text: str, genus: int) -> "TwoTorsionLabel":
        text = text.strip()
        if text == "O":
            return cls.zero(genus)
        if len(text) != 2 * genus:
            raise ValueError(f"label {text!r} has length {len(text)}, expected {2 * genus}")
        if set(text) - {"0", "1"}:
            raise ValueError(f"label {text!r} is not a bitstring")
        return cls(genus, int(text, 2))

    @classmethod
    def from_coords(cls, genus: int, **coords: int) -> "TwoTorsionLabel":
        """Build from named coordinates, e.g. ``from_coords(2, a1=1, b2=1)``."""
        chars = ["0"] * (2 * genus)
        for name, val in coords.items():
            kind, idx = name[0], int(name[1:])
            if kind not in "ab" or not 1 <= idx <= genus:
                raise ValueError(f"bad coordinate {name!r}")
            chars[2 * (idx - 1) + (kind == "b")] = str(val & 1)
        return cls(genus, int("".join(chars), 2))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "TwoTorsionLabel") -> "TwoTorsionLabel":
        _check_genus(self, other)
        return TwoTorsionLabel(self.genus, self.bits ^ other.bits)

    __add__ = __xor__

    def __str__(self) -> str:
        return format(self.bits, f"0{2 * self.genus}b")


def _check_genus(x: TwoTorsionLabel, y: TwoTorsionLabel):
    if x.genus != y.genus:
        raise GenusMismatch(f"labels of genus {x.genus} and {y.genus}")


def _swap_pairs(bits: int, genus: int) -> int:
    # exchange each (a_i, b_i) coordinate pair
    odd = int("10" * genus, 2)
    even = odd >> 1
    return ((bits & odd) >> 1) | ((bits & even) << 1)


def weil_pairing(x: TwoTorsionLabel, y: TwoTorsionLabel) -> int:
    """Standard symplectic form: sum over i of x_ai*y_bi + x_bi*y_ai mod 2."""
    _check_genus(x, y)
    return bin(x.bits & _swap_pairs(y.bits, y.genus)).count("1") & 1


class Relation(Enum):
    FULL_SPACE = "FullSpace"
    SAME_LOCUS = "SameLocus"
    DISJOINT = "Disjoint"
    FINITE_POINTS = "FinitePoints"


@dataclass(frozen=True)
class FixedLocusRelation:
    relation: Relation
    count: int | None = None

    def __str__(self):
        if self.relation is Relation.FINITE_POINTS:
            return f"FinitePoints({self.count})"
        return self.relation.value


def fixed_locus_relation(x: TwoTorsionLabel, y: TwoTorsionLabel) -> FixedLocusRelation:
    """How the fixed loci of tensoring by ``x`` and by ``y`` meet.

    Nontrivial labels with pairing 1 meet in ``2**(2g-2)`` points; with
    pairing 0 (and distinct) their loci are disjoint.
    """
    _check_genus(x, y)
    if x.is_zero() or y.is_zero():
        return FixedLocusRelation(Relation.FULL_SPACE)
    if x == y:
        return FixedLocusRelation(Relation.SAME_LOCUS)
    if weil_pairing(x, y):
        return FixedLocusRelation(Relation.FINITE_POINTS, 2 ** (2 * x.genus - 2))
    return FixedLocusRelation(Relation.DISJOINT)


def enumerate_labels(genus: int, cap_bits: int = ENUMERATION_CAP_BITS) -> list[TwoTorsionLabel]:
    """All ``2**(2g)`` labels, zero first, in increasing bitstring order."""
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    if 2 * genus > cap_bits:
        raise ValueError(f"genus {genus} exceeds the enumeration cap of 2**{cap_bits} labels")
    return [TwoTorsionLabel(genus, b) for b in range(1 << (2 * genus))]


def nonzero_labels(genus: int, cap_bits: int = ENUMERATION_CAP_BITS) -> Iterator[TwoTorsionLabel]:
    return iter(enumerate_labels(genus, cap_bits)[1:])
