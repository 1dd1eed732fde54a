"""Print CR Betti vectors, Euler characteristics and v for a range of genera.

    python scripts/betti_survey.py --max-genus 8
"""
import argparse

from chen_ruan.exact_arith import format_rational
from chen_ruan.ring import constants
from chen_ruan.tables import betti_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-genus", type=int, default=2)
    ap.add_argument("--max-genus", type=int, default=6)
    args = ap.parse_args()
    for g in range(args.min_genus, args.max_genus + 1):
        rows = betti_rows(g)
        cr = rows["cr"]
        euler = sum((-1) ** k * b for k, b in enumerate(cr))
        print(f"g={g} v={format_rational(constants(g).v)} euler={euler} total={sum(cr)}")
        print("  cr       ", ",".join(map(str, cr)))
        print("  untwisted", ",".join(map(str, rows["untwisted"])))


if __name__ == "__main__":
    main()
