"""Run every property suite in both scalar modes and print a table.

    python scripts/props_sweep.py --cases 500 --seed 2024 [--json out.json]
"""

import argparse
import json
import time

from polyadica import numeric
from polyadica.props import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", default=None, help="also write the full reports here")
    args = ap.parse_args()

    reports = []
    print(f"{'suite':40s} {'mode':9s} {'failed':>7s} {'expected':>9s} {'secs':>6s}")
    for name, suite in SUITES.items():
        for mode in numeric.MODES:
            t = time.perf_counter()
            r = run_suite(name, args.cases, args.seed, mode)
            r["seconds"] = round(time.perf_counter() - t, 3)
            reports.append(r)
            expect = "holds" if suite.expected_to_hold else "fails"
            print(f"{name:40s} {mode:9s} {r['failed']:7d} {expect:>9s} {r['seconds']:6.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
