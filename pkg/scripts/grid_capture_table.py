#!/usr/bin/env python3
"""Print the two-cop capture-time table for m x n grids.

For every grid up to the requested side length, shows the exact solver
value, the closed-form floor((m+n)/2)-1, and the exhaustive best
response against the constructive two-cop strategy.  All three columns
must agree.

Usage: python3 scripts/grid_capture_table.py [--max-side 6]
"""
import argparse
import sys
import time

from treecops import (
    GameConfig,
    best_response_length,
    cartesian_product,
    path_graph,
    solve,
    two_cop_strategy,
)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-side", type=int, default=6)
    args = parser.parse_args()

    config = GameConfig(cop_count=2)
    print(f"{'grid':>8} {'solver':>7} {'formula':>8} {'strategy':>9} {'time':>8}")
    disagreements = 0
    for m in range(2, args.max_side + 1):
        for n in range(m, args.max_side + 1):
            started = time.perf_counter()
            product = cartesian_product(path_graph(m), path_graph(n))
            exact = solve(product.flat, 2).capture_time
            formula = (m + n) // 2 - 1
            strategy = best_response_length(
                product.flat, config, two_cop_strategy(product)
            )
            elapsed = time.perf_counter() - started
            mark = "" if exact == formula == strategy else "  <-- DISAGREES"
            if mark:
                disagreements += 1
            label = f"{m}x{n}"
            print(
                f"{label:>8} {exact:>7} {formula:>8} {strategy:>9} {elapsed:>7.2f}s{mark}"
            )
    if disagreements:
        print(f"{disagreements} disagreements", file=sys.stderr)
        return 1
    print("all rows agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
