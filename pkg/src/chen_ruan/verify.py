"""Ring-axiom verification suites.

Exhaustive mode walks canonical-basis pairs/triples through a cached table
of structure constants. Sampled mode draws seeded random homogeneous classes
and multiplies them directly with :func:`chen_ruan.ring.product`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import ExteriorClass, even_masks, wedge_sign, top_mask
from .gamma import TwoTorsionLabel
from .ring import (
    CRClass,
    canonical_basis,
    constants,
    coordinates,
    poincare_pair,
    product,
)

__all__ = [
    "SUITES",
    "VerifyConfig",
    "Report",
    "verify",
    "StructureTable",
    "gram_blocks",
    "rational_rank",
]

SUITES = ("assoc", "commutativity", "unit", "frobenius", "graded", "pairing")
ALIASES = {"associativity": "assoc", "pairing_rank": "pairing", "commutative": "commutativity"}


@dataclass
class VerifyConfig:
    samples: int = 1000
    seed: int = 0
    # None: exhaustive when the basis is small enough, sampled otherwise
    exhaustive: bool | None = None
    max_exhaustive_genus: int = 3
    # full triple enumeration up to this many triples; beyond, only triples
    # with total degree <= 6g-6 are walked (the rest vanish by grading)
    full_triple_cap: int = 100_000


@dataclass
class Report:
    suite: str
    g: int
    mode: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.suite}: g={self.g} mode={self.mode} checked={self.checked} violations={len(self.violations)} {status}"


class StructureTable:
    """Lazily cached products of canonical-basis elements, in coordinates."""

    def __init__(self, g: int):
        self.g = g
        self.basis = canonical_basis(g)
        self._classes = [b.to_class() for b in self.basis]
        self._cache: dict[tuple[int, int], dict[int, Fraction]] = {}
        self.pairing = _pairing_partners(g)

    def __len__(self):
        return len(self.basis)

    def mul(self, i: int, j: int) -> dict[int, Fraction]:
        key = (i, j)
        out = self._cache.get(key)
        if out is None:
            out = coordinates(product(self._classes[i], self._classes[j]))
            self._cache[key] = out
        return out

    def mul_vec_right(self, vec: dict[int, Fraction], k: int) -> dict[int, Fraction]:
        return _combine((c, self.mul(p, k)) for p, c in vec.items())

    def mul_vec_left(self, i: int, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        return _combine((c, self.mul(i, q)) for q, c in vec.items())

    def pair(self, vec: dict[int, Fraction], k: int) -> Fraction:
        return sum((c * self.pairing[p].get(k, 0) for p, c in vec.items()), Fraction(0))


def _combine(scaled) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for c, vec in scaled:
        for idx, x in vec.items():
            out[idx] = out.get(idx, Fraction(0)) + c * x
    return {k: v for k, v in out.items() if v}


def _pairing_partners(g: int) -> list[dict[int, Fraction]]:
    """Sparse Gram matrix of the canonical basis (each row has at most one entry)."""
    basis = canonical_basis(g)
    index = {(b.label.bits, b.mask): i for i, b in enumerate(basis)}
    v = constants(g).v
    top = top_mask(g)
    rows: list[dict[int, Fraction]] = []
    for b in basis:
        if b.is_kappa:
            rows.append({index[(0, 3 * g - 3 - b.mask)]: v})
        else:
            comp = top ^ b.mask
            rows.append({index[(b.label.bits, comp)]: Fraction(wedge_sign(b.mask, comp))})
    return rows


def rational_rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank over Q of a sparse matrix given as row dicts (Gaussian elimination)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                pivots[col] = r
                rank += 1
                break
            p = pivots[col]
            f = r[col] / p[col]
            for k, v in p.items():
                nv = r.get(k, Fraction(0)) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def gram_blocks(g: int) -> list[dict]:
    """Gram blocks between basis elements of degree d and 6g-6-d, for d <= 3g-3."""
    basis = canonical_basis(g)
    by_deg: dict[int, list[int]] = {}
    for i, b in enumerate(basis):
        by_deg.setdefault(b.degree, []).append(i)
    top = 6 * g - 6
    partners = _pairing_partners(g)
    blocks = []
    for d in sorted(by_deg):
        if d > top - d:
            break
        rows, cols = by_deg[d], by_deg.get(top - d, [])
        col_pos = {c: n for n, c in enumerate(cols)}
        matrix = []
        for i in rows:
            row = {col_pos[j]: val for j, val in partners[i].items() if j in col_pos}
            matrix.append(row)
        blocks.append({"degree": d, "complement": top - d, "rows": rows, "cols": cols, "matrix": matrix})
    return blocks


# -- exhaustive suites ------------------------------------------------------

def _triples(table: StructureTable, cfg: VerifyConfig):
    n = len(table)
    if n**3 <= cfg.full_triple_cap:
        return itertools.product(range(n), repeat=3), "exhaustive"
    top = 6 * table.g - 6
    deg = [b.degree for b in table.basis]
    gen = (
        (i, j, k)
        for i in range(n)
        for j in range(n)
        if deg[i] + deg[j] <= top
        for k in range(n)
        if deg[i] + deg[j] + deg[k] <= top
    )
    return gen, "exhaustive-degree-filtered"


def _exhaustive(suite: str, g: int, cfg: VerifyConfig) -> Report:
    table = StructureTable(g)
    n = len(table)
    basis = table.basis
    if suite in ("assoc", "frobenius"):
        triples, mode = _triples(table, cfg)
        rep = Report(suite, g, mode)
        for i, j, k in triples:
            rep.checked += 1
            if suite == "assoc":
                lhs = table.mul_vec_right(table.mul(i, j), k)
                rhs = table.mul_vec_left(i, table.mul(j, k))
            else:
                lhs = table.pair(table.mul(i, j), k)
                rhs = _pair_left(table, i, table.mul(j, k))
            if lhs != rhs:
                rep.violations.append(f"({i},{j},{k}): {lhs} != {rhs}")
        return rep
    rep = Report(suite, g, "exhaustive")
    if suite == "unit":
        for i in range(n):
            rep.checked += 1
            e = {i: Fraction(1)}
            if table.mul(0, i) != e or table.mul(i, 0) != e:
                rep.violations.append(f"unit fails on basis element {i}")
        return rep
    for i in range(n):
        for j in range(n):
            rep.checked += 1
            if suite == "commutativity":
                if table.mul(i, j) != table.mul(j, i):
                    rep.violations.append(f"({i},{j}) do not commute")
            elif suite == "graded":
                want = basis[i].degree + basis[j].degree
                got = {basis[p].degree for p in table.mul(i, j)}
                if got - {want}:
                    rep.violations.append(f"({i},{j}) has degrees {sorted(got)}, expected {want}")
    return rep


def _pair_left(table: StructureTable, i: int, vec: dict[int, Fraction]) -> Fraction:
    row = table.pairing[i]
    return sum((c * row.get(q, 0) for q, c in vec.items()), Fraction(0))


def _pairing_suite(g: int) -> Report:
    rep = Report("pairing", g, "exhaustive")
    for block in gram_blocks(g):
        rep.checked += 1
        r = rational_rank(block["matrix"])
        if not (r == len(block["rows"]) == len(block["cols"])):
            rep.violations.append(
                f"degree {block['degree']}: rank {r} for a {len(block['rows'])}x{len(block['cols'])} block"
            )
    # symmetry of the pairing on the basis
    partners = _pairing_partners(g)
    for i, row in enumerate(partners):
        for j, val in row.items():
            rep.checked += 1
            if partners[j].get(i) != val:
                rep.violations.append(f"pairing not symmetric at ({i},{j})")
    return rep


# -- sampled suites ---------------------------------------------------------

def random_homogeneous(rng: random.Random, g: int, labels: list[TwoTorsionLabel], degree: int | None = None) -> CRClass:
    """Random homogeneous class supported on ``labels`` (zero label = kappa line)."""
    shift = 2 * (g - 1)
    if degree is None:
        # half the draws stay at or below the top twisted degree 4g-4
        degree = 2 * rng.randrange(2 * g - 1 if rng.random() < 0.5 else 3 * g - 2)
    out = CRClass.zero(g)
    for label in labels:
        if rng.random() < 0.3:
            continue
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if label.is_zero():
            if degree // 2 <= 3 * g - 3:
                out = out + CRClass.kappa_power(g, degree // 2, coeff)
            continue
        internal = degree - shift
        masks = even_masks(g, internal) if 0 <= internal <= 2 * g - 2 else []
        if masks:
            chosen = rng.sample(masks, min(len(masks), rng.randint(1, 2)))
            ext = ExteriorClass(g, {m: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for m in chosen})
            out = out + CRClass.sector_class(label, ext)
    return out


def _label_pool(rng: random.Random, g: int) -> list[TwoTorsionLabel]:
    # a random plane {0, L1, L2, L1+L2} so that case d triples actually occur
    n = 1 << (2 * g)
    l1 = TwoTorsionLabel(g, rng.randrange(1, n))
    l2 = TwoTorsionLabel(g, rng.randrange(1, n))
    return sorted({TwoTorsionLabel.zero(g), l1, l2, l1 ^ l2})


def _sampled(suite: str, g: int, cfg: VerifyConfig) -> Report:
    rng = random.Random(f"{suite}:{g}:{cfg.seed}")
    rep = Report(suite, g, f"sampled(n={cfg.samples},seed={cfg.seed})")
    if suite == "pairing":
        return _pairing_suite(g)
    unit = CRClass.unit(g)
    for _ in range(cfg.samples):
        pool = _label_pool(rng, g)
        a, b, c = (random_homogeneous(rng, g, pool) for _ in range(3))
        rep.checked += 1
        if suite == "assoc":
            ok = product(product(a, b), c) == product(a, product(b, c))
        elif suite == "commutativity":
            ok = product(a, b) == product(b, a)
        elif suite == "unit":
            ok = product(unit, a) == a == product(a, unit)
        elif suite == "frobenius":
            ok = poincare_pair(product(a, b), c) == poincare_pair(a, product(b, c))
        elif suite == "graded":
            ab = product(a, b)
            da, db = a.degree(), b.degree()
            ok = ab.is_zero() or da is None or db is None or ab.degree() == da + db
        else:
            raise ValueError(suite)
        if not ok:
            rep.violations.append(f"sample {rep.checked}: {a!r}, {b!r}, {c!r}")
    return rep


def verify(g: int, suite: str = "all", cfg: VerifyConfig | None = None) -> list[Report]:
    """Run one suite (or ``"all"``) at genus ``g`` and return one report per suite."""
    cfg = cfg or VerifyConfig()
    suite = ALIASES.get(suite, suite)
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    exhaustive = cfg.exhaustive
    if exhaustive is None:
        exhaustive = g <= 2
    if exhaustive and g > cfg.max_exhaustive_genus:
        raise ValueError(f"exhaustive verification is capped at genus {cfg.max_exhaustive_genus}")
    reports = []
    for name in names:
        if name == "pairing":
            reports.append(_pairing_suite(g))
        elif exhaustive:
            reports.append(_exhaustive(name, g, cfg))
        else:
            reports.append(_sampled(name, g, cfg))
    return reports
