"""Command-line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when a verification
suite reports a violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .exact_arith import format_rational
from .expr import ParseError, format_class, parse_class
from .gamma import TwoTorsionLabel
from .ring import constants, poincare_pair, product, three_point
from .sectors import sector_descriptor
from .tables import betti_csv, betti_json, betti_latex, write_table
from .verify import SUITES, VerifyConfig, verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _genus(text: str) -> int:
    g = int(text)
    if g < 2:
        raise argparse.ArgumentTypeError("genus must be >= 2")
    return g


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chen-ruan", description="Chen-Ruan cohomology of PSL(2,C) moduli with w2 != 0")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--genus", "-g", type=_genus, required=True)
        return sp

    sp = cmd("betti", "CR Betti numbers")
    sp.add_argument("--format", choices=("json", "csv", "latex"), default="csv")
    cmd("constants", "intersection constants")
    for name in ("product", "pair"):
        sp = cmd(name, f"{name} of two class expressions")
        sp.add_argument("--lhs", required=True)
        sp.add_argument("--rhs", required=True)
    sp = cmd("triple", "three-point function")
    sp.add_argument("exprs", nargs=3, metavar="EXPR")
    sp = cmd("sector", "sector descriptor")
    sp.add_argument("--label", required=True)
    sp = cmd("verify", "ring-axiom verification")
    sp.add_argument("--suite", default="all", choices=SUITES + ("all", "associativity", "pairing_rank"))
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exhaustive", action="store_true", default=None)
    sp = cmd("table", "export structure constants as JSON")
    sp.add_argument("--out", required=True)
    return p


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return 1
    except ParseError as exc:
        print(f"parse error {exc}\n{exc.caret()}", file=err)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 1


def _dispatch(args, out) -> int:
    g = args.genus
    if args.command == "betti":
        fmt = {"json": betti_json, "csv": betti_csv, "latex": betti_latex}[args.format]
        text = fmt(g)
        out.write(text if text.endswith("\n") else text + "\n")
    elif args.command == "constants":
        c = constants(g)
        print(f"thaddeus_number {format_rational(c.thaddeus_number)}", file=out)
        print(f"v {format_rational(c.v)}", file=out)
    elif args.command == "product":
        x = product(parse_class(args.lhs, g), parse_class(args.rhs, g))
        print(format_class(x), file=out)
    elif args.command == "pair":
        print(format_rational(poincare_pair(parse_class(args.lhs, g), parse_class(args.rhs, g))), file=out)
    elif args.command == "triple":
        a, b, c = (parse_class(e, g) for e in args.exprs)
        print(format_rational(three_point(a, b, c)), file=out)
    elif args.command == "sector":
        desc = sector_descriptor(TwoTorsionLabel.parse(args.label, g))
        print(json.dumps(desc.as_dict()), file=out)
    elif args.command == "verify":
        cfg = VerifyConfig(seed=args.seed, exhaustive=args.exhaustive)
        if args.samples is not None:
            cfg.samples = args.samples
            if args.exhaustive is None:
                cfg.exhaustive = False
        reports = verify(g, args.suite, cfg)
        for r in reports:
            print(r.line(), file=out)
            for v in r.violations[:10]:
                print(f"  {v}", file=out)
        return 0 if all(r.ok for r in reports) else 2
    elif args.command == "table":
        doc = write_table(g, args.out)
        print(f"wrote {len(doc['basis'])} basis elements, {len(doc['products'])} products to {args.out}", file=out)
    return 0


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
