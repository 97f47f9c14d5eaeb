#!/usr/bin/env python3
"""Run every verification suite and print one summary line per suite.

Exits nonzero if any claim fails.  `--quick` shrinks corpus sizes for a
fast smoke run; the defaults match the full verification configuration.

Usage: python3 scripts/run_all_suites.py [--quick]
"""
import argparse
import sys
import time

from treecops.suites import SUITES

QUICK_ARGS = {
    "thm1": dict(max_size=5, sample_count=20),
    "theorem2": dict(count=10, max_size=5),
    "corollary-grid": dict(max_mn=4),
    "sandwich": dict(count=10, max_size=5),
    "lemma3": dict(count=10, max_size=5),
    "move-order": dict(count=10),
    "constructive": dict(count=10, max_size=5, max_mn=4),
    "three-trees": dict(),
}


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    failed = False
    for name in sorted(SUITES):
        kwargs = QUICK_ARGS.get(name, {}) if args.quick else {}
        started = time.perf_counter()
        result = SUITES[name](**kwargs)
        elapsed = time.perf_counter() - started
        print(f"{result.summary()} time={elapsed:.1f}s")
        if not result.passed:
            failed = True
            for report in result.failing_reports():
                print(f"  FAILING: {report.instance}", file=sys.stderr)
                for line in report.lines():
                    print(f"    {line}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
