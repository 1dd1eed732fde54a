"""Serialized artifacts: structure-constant tables and Betti tables.

All rationals are written exactly as ``"p/q"`` (or ``"p"``) strings.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .exact_arith import format_rational, parse_rational
from .exterior import monomial_str
from .ring import canonical_basis, constants, cr_poincare, untwisted_poincare, twisted_poincare
from .verify import StructureTable, gram_blocks

__all__ = [
    "table_document",
    "write_table",
    "load_table",
    "products_from_document",
    "betti_rows",
    "betti_json",
    "betti_csv",
    "betti_latex",
]


def _vec(vec: dict[int, Fraction]) -> dict[str, str]:
    return {str(k): format_rational(v) for k, v in sorted(vec.items())}


def table_document(g: int) -> dict:
    """Full multiplication table and Gram blocks of the canonical basis."""
    basis = canonical_basis(g)
    table = StructureTable(g)
    consts = constants(g)
    doc_basis = []
    for i, b in enumerate(basis):
        doc_basis.append(
            {
                "index": i,
                "label": str(b.label),
                "monomial": f"k^{b.mask}" if b.is_kappa else monomial_str(b.mask),
                "degree": b.degree,
            }
        )
    products = []
    n = len(basis)
    for i in range(n):
        for j in range(n):
            vec = table.mul(i, j)
            if vec:
                products.append({"left": i, "right": j, "result": _vec(vec)})
    pairings = []
    for block in gram_blocks(g):
        pairings.append(
            {
                "degree": block["degree"],
                "complement": block["complement"],
                "rows": block["rows"],
                "cols": block["cols"],
                "entries": [
                    [r, c, format_rational(v)] for r, row in enumerate(block["matrix"]) for c, v in sorted(row.items())
                ],
            }
        )
    return {
        "genus": g,
        "basis": doc_basis,
        "constants": {
            "thaddeus_number": format_rational(consts.thaddeus_number),
            "v": format_rational(consts.v),
        },
        "products": products,
        "pairings": pairings,
    }


def write_table(g: int, path) -> dict:
    doc = table_document(g)
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=False)
        fh.write("\n")
    return doc


def load_table(path) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    for key in ("genus", "basis", "constants", "products", "pairings"):
        if key not in doc:
            raise ValueError(f"table document missing key {key!r}")
    return doc


def products_from_document(doc: dict) -> dict[tuple[int, int], dict[int, Fraction]]:
    return {
        (p["left"], p["right"]): {int(k): parse_rational(v) for k, v in p["result"].items()}
        for p in doc["products"]
    }


# -- Betti tables -----------------------------------------------------------

def betti_rows(g: int) -> dict[str, list[int]]:
    cr = cr_poincare(g)
    top = 6 * g - 6
    untw = untwisted_poincare(g)
    tw = twisted_poincare(g)
    shift = 2 * g - 2
    n_tw = 2 ** (2 * g) - 1
    return {
        "degree": list(range(top + 1)),
        "cr": [int(cr[k]) for k in range(top + 1)],
        "untwisted": [int(untw[k]) for k in range(top + 1)],
        "twisted": [int(n_tw * tw[k - shift]) if k >= shift else 0 for k in range(top + 1)],
    }


def betti_json(g: int) -> str:
    rows = betti_rows(g)
    euler = sum((-1) ** k * b for k, b in enumerate(rows["cr"]))
    doc = {
        "genus": g,
        "cr_betti": rows["cr"],
        "untwisted_betti": rows["untwisted"],
        "twisted_betti": rows["twisted"],
        "euler_characteristic": euler,
    }
    return json.dumps(doc)


def betti_csv(g: int) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(betti_rows(g)["cr"])
    return buf.getvalue()


def betti_latex(g: int) -> str:
    rows = betti_rows(g)
    ncol = len(rows["degree"])
    lines = [
        "\\begin{tabular}{l" + "r" * ncol + "}",
        "$i$ & " + " & ".join(map(str, rows["degree"])) + " \\\\",
        "\\hline",
        "$b_i$ untwisted & " + " & ".join(map(str, rows["untwisted"])) + " \\\\",
        "$b_i$ twisted & " + " & ".join(map(str, rows["twisted"])) + " \\\\",
        "$b_i^{CR}$ & " + " & ".join(map(str, rows["cr"])) + " \\\\",
        "\\end{tabular}",
    ]
    return "\n".join(lines) + "\n"
