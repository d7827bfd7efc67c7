#!/usr/bin/env python3
"""Sweep the verification suites over every family up to a size bound.

Usage: python scripts/run_checks.py [--max-total 5] [--suite all]
Prints one line per (m, n) and exits nonzero if anything fails.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from bubblelattice.checks import SUITE_NAMES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-total", type=int, default=5, help="largest m+n to sweep")
    parser.add_argument("--suite", default="all")
    args = parser.parse_args()
    suites = list(SUITE_NAMES) if args.suite == "all" else args.suite.split(",")

    failures = 0
    for total in range(args.max_total + 1):
        for m in range(total + 1):
            n = total - m
            started = time.monotonic()
            bad = []
            for name in suites:
                for result in run_suite(name, m, n):
                    if result.status == "fail":
                        bad.append(result.id)
            elapsed = time.monotonic() - started
            status = "ok" if not bad else f"FAIL {bad}"
            print(f"({m},{n})  {elapsed:6.2f}s  {status}")
            failures += len(bad)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
