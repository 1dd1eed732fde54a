"""Run every verification suite over a range of genera and write a JSON summary.

    python scripts/verify_sweep.py --max-genus 5 --samples 500 --out sweep.json
"""
import argparse
import json
import time

from chen_ruan.verify import VerifyConfig, verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-genus", type=int, default=4)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    summary = []
    for g in range(2, args.max_genus + 1):
        cfg = VerifyConfig(samples=args.samples, seed=args.seed)
        t0 = time.perf_counter()
        reports = verify(g, "all", cfg)
        elapsed = time.perf_counter() - t0
        for r in reports:
            print(r.line())
            summary.append({"genus": g, "suite": r.suite, "mode": r.mode, "checked": r.checked,
                            "violations": len(r.violations)})
        print(f"  g={g} done in {elapsed:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(summary, fh, indent=1)


if __name__ == "__main__":
    main()
