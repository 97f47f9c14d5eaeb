"""Command-line entry point: solve, verify, simulate, gen.

Exit codes: 0 success / all claims pass, 1 verification failure,
2 input error, 3 resource budget exceeded.  Reports and traces are
byte-identical across runs for identical arguments; wall-clock timing
goes to stderr so it cannot perturb that.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
import time
from pathlib import Path

from .bounds import FAIL
from .engine import (
    GameConfig,
    IllegalMoveError,
    MoveOrder,
    ResourceBudgetError,
    format_trace,
    is_escape,
    simulate,
)
from .generators import grid_graph, path_graph, random_tree
from .graphs import Graph, GraphError, format_graph, parse_graph
from .products import ProductGraph, cartesian_product
from .solver import DEFAULT_STATE_BUDGET, dump_value_table, solve
from .strategies import (
    StrategyMismatchError,
    make_cop_strategy,
    make_robber_strategy,
)
from .suites import SUITES
from .tree_strategies import StrategyInvariantError

BUDGET_ENV = "TREECOPS_STATE_BUDGET"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_SPEC_PATTERNS = {
    "path": re.compile(r"^path:(\d+)$"),
    "grid": re.compile(r"^grid:(\d+)x(\d+)$"),
    "tree": re.compile(r"^tree:(\d+):(\d+)$"),
}


def load_graph_source(source: str) -> Graph:
    """A file path, or an inline spec path:N | grid:MxN | tree:N:SEED."""
    m = _SPEC_PATTERNS["path"].match(source)
    if m:
        return path_graph(int(m.group(1)))
    m = _SPEC_PATTERNS["grid"].match(source)
    if m:
        return grid_graph(int(m.group(1)), int(m.group(2)))
    m = _SPEC_PATTERNS["tree"].match(source)
    if m:
        return random_tree(int(m.group(1)), int(m.group(2)))
    path = Path(source)
    if not path.exists():
        raise GraphError(f"graph source {source!r}: no such file and not a generator spec")
    return parse_graph(path.read_text())


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_STATE_BUDGET


def _order(args) -> MoveOrder:
    return MoveOrder(args.order)


def cmd_solve(args) -> int:
    g = load_graph_source(args.graph)
    started = time.perf_counter()
    result = solve(g, args.cops, _order(args), state_budget=_budget(args))
    elapsed = time.perf_counter() - started
    if is_escape(result.capture_time):
        print("capt=ESCAPE")
    else:
        print(f"capt={result.capture_time}")
    print("central: " + " ".join("(" + ",".join(map(str, t)) + ")" for t in result.central_tuples))
    print(f"states={len(result.table.value)}")
    print(f"time={elapsed:.3f}s", file=sys.stderr)
    if args.dump_table:
        Path(args.dump_table).write_text(dump_value_table(result.table))
    return EXIT_OK


def cmd_verify(args) -> int:
    suite_fn = SUITES.get(args.suite)
    if suite_fn is None:
        print(f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
        return EXIT_INPUT
    kwargs = {}
    if args.suite == "thm1":
        kwargs = {"max_size": args.max_size, "sample_count": args.count, "seed": args.seed}
    elif args.suite in ("theorem2", "sandwich", "lemma3"):
        kwargs = {"seed": args.seed, "count": args.count, "max_size": args.max_size}
    elif args.suite == "constructive":
        kwargs = {"seed": args.seed, "count": args.count,
                  "max_size": args.max_size, "max_mn": args.max}
    elif args.suite == "corollary-grid":
        kwargs = {"max_mn": args.max}
    elif args.suite == "move-order":
        kwargs = {"seed": args.seed, "count": args.count}
    try:
        result = suite_fn(**kwargs)
    except StrategyInvariantError as exc:
        # A tripped strategy invariant is a failed verification, not bad input.
        print(f"suite {args.suite!r} aborted by invariant violation: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    for report in result.reports:
        for line in report.lines():
            print(f"{line}  # {report.instance}")
    print(result.summary())
    if not result.passed:
        out_dir = Path(args.out) / args.suite
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, report in enumerate(result.failing_reports()):
            lines = [f"# instance: {report.instance}"]
            lines.extend(report.lines())
            (out_dir / f"failure-{i}.txt").write_text("\n".join(lines) + "\n")
            g = report.provenance.get("graph")
            if isinstance(g, Graph):
                (out_dir / f"failure-{i}.g").write_text(format_graph(g))
            product = report.provenance.get("product")
            if isinstance(product, ProductGraph):
                try:
                    trace_text = _exemplar_strategy_trace(product)
                except Exception as exc:  # the strategy itself may be what failed
                    trace_text = f"# trace unavailable: {exc}\n"
                (out_dir / f"failure-{i}.trace").write_text(trace_text)
        print(f"counterexamples written to {out_dir}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _exemplar_strategy_trace(product: ProductGraph) -> str:
    # One replayable game of the two-cop strategy against the optimal
    # robber; not the full best-response tree, but enough to rerun the
    # failing instance offline.
    from .solver import optimal_robber_strategy
    from .tree_strategies import two_cop_strategy

    robber = optimal_robber_strategy(solve(product.flat, 2))
    trace = simulate(
        product.flat, GameConfig(cop_count=2), two_cop_strategy(product), robber
    )
    return format_trace(
        trace, "counterexample", lambda v: "(%d,%d)" % product.pair_of(v)
    )


def cmd_simulate(args) -> int:
    t1 = load_graph_source(args.t1)
    product: ProductGraph | None = None
    if args.t2:
        product = cartesian_product(t1, load_graph_source(args.t2))
        g = product.flat
    else:
        g = t1
    k = args.k if args.k is not None else (2 if product is not None else 1)
    order = _order(args)
    config = GameConfig(cop_count=k, move_order=order, max_rounds=args.max_rounds)
    cop = make_cop_strategy(
        args.cops, g, k, product=product, order=order, seed=args.seed,
        state_budget=_budget(args),
    )
    robber = make_robber_strategy(
        args.robber, g, k, order=order, seed=args.seed, state_budget=_budget(args),
    )
    trace = simulate(g, config, cop, robber)
    label = args.t1 if not args.t2 else f"{args.t1} x {args.t2}"
    if product is not None:
        renderer = lambda v: "(%d,%d)" % product.pair_of(v)  # noqa: E731
    else:
        renderer = str
    text = format_trace(trace, label, renderer)
    if args.out:
        Path(args.out).write_text(text)
        print(str(trace.outcome))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "path":
        g = path_graph(args.n)
    elif args.kind == "grid":
        g = grid_graph(args.m, args.n)
    elif args.kind == "random-tree":
        g = random_tree(args.n, args.seed)
    elif args.kind == "product":
        if not args.a or not args.b:
            raise GraphError("gen --kind product needs --a and --b")
        g = cartesian_product(load_graph_source(args.a), load_graph_source(args.b)).flat
    else:
        raise GraphError(f"unknown kind {args.kind!r}")
    text = format_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecops",
        description="Pursuit-game solver, strategies, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact capture time of a graph")
    p.add_argument("--graph", required=True, help="graph file or spec (path:N, grid:MxN, tree:N:SEED)")
    p.add_argument("--cops", type=int, required=True)
    p.add_argument("--order", choices=[o.value for o in MoveOrder], default=MoveOrder.ROBBER_FIRST.value)
    p.add_argument("--dump-table", default=None, help="write the value table to this file")
    p.add_argument("--budget", type=int, default=None, help=f"state budget (or ${BUDGET_ENV})")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, help=", ".join(sorted(SUITES)))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--max", type=int, default=5, help="max grid side")
    p.add_argument("--max-size", type=int, default=7, help="max tree size")
    p.add_argument("--out", default="verify-failures", help="counterexample directory")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("simulate", help="play two strategies and write the trace")
    p.add_argument("--t1", required=True, help="graph (or first factor) file or spec")
    p.add_argument("--t2", default=None, help="second factor: play on the product")
    p.add_argument("--cops", required=True, help="thm1 | lemma2 | optimal | random | stationary")
    p.add_argument("--robber", required=True, help="optimal | random | stationary")
    p.add_argument("--k", type=int, default=None, help="cop count (default 1, or 2 on a product)")
    p.add_argument("--order", choices=[o.value for o in MoveOrder], default=MoveOrder.ROBBER_FIRST.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p.add_argument("--out", default=None, help="trace file (default: stdout)")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("gen", help="write a graph file")
    p.add_argument("--kind", required=True, choices=["path", "grid", "random-tree", "product"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", default=None)
    p.add_argument("--b", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ResourceBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, StrategyMismatchError, IllegalMoveError,
            StrategyInvariantError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
