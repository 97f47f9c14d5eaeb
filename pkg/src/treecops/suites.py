"""Named verification suites over seeded corpora.

Each suite returns a SuiteResult whose reports are deterministic for a
fixed configuration, so identical runs emit byte-identical claim lines.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    BoundReport,
    FAIL,
    PASS,
    VACUOUS,
    check_corollaries,
    check_lemma3,
    check_multi_tree_bounds,
    check_theorem2,
    make_claim,
    n_tree_upper_bound,
)
from .engine import GameConfig, best_response_length, is_escape
from .generators import (
    SplitMix64,
    all_labeled_trees,
    cycle_graph,
    grid_graph,
    path_graph,
    random_tree,
)
from .graphs import Graph, diameter
from .products import ProductGraph, cartesian_product
from .solver import capture_time_both_orders, solve
from .tree_strategies import one_cop_strategy, two_cop_strategy


@dataclass
class SuiteResult:
    name: str
    reports: list[BoundReport] = field(default_factory=list)

    def counts(self) -> tuple[int, int, int]:
        npass = nfail = nvac = 0
        for report in self.reports:
            for claim in report.claims:
                if claim.status == PASS:
                    npass += 1
                elif claim.status == FAIL:
                    nfail += 1
                else:
                    nvac += 1
        return npass, nfail, nvac

    @property
    def passed(self) -> bool:
        return self.counts()[1] == 0

    def failing_reports(self) -> list[BoundReport]:
        return [r for r in self.reports if not r.passed]

    def summary(self) -> str:
        npass, nfail, nvac = self.counts()
        return (
            f"SUMMARY suite={self.name} reports={len(self.reports)} "
            f"pass={npass} fail={nfail} vacuous={nvac}"
        )


def tree_pair_corpus(
    seed: int, count: int, min_size: int = 2, max_size: int = 7
) -> list[tuple[Graph, Graph, str]]:
    """Seeded random tree pairs; the description string pins the instance."""
    rng = SplitMix64(seed)
    span = max_size - min_size + 1
    corpus = []
    for i in range(count):
        n1 = min_size + rng.below(span)
        n2 = min_size + rng.below(span)
        s1 = rng.next_u64()
        s2 = rng.next_u64()
        corpus.append(
            (random_tree(n1, s1), random_tree(n2, s2), f"pair[{i}] n=({n1},{n2})")
        )
    return corpus


def suite_thm1(max_size: int = 7, sample_count: int = 100, seed: int = 11) -> SuiteResult:
    """capt1 of every labeled tree up to max_size equals ceil(diam/2);
    the one-cop chase achieves the same value on a seeded sample."""
    result = SuiteResult("thm1")
    for n in range(2, max_size + 1):
        for idx, tree in enumerate(all_labeled_trees(n)):
            want = (diameter(tree) + 1) // 2
            got = solve(tree, 1).capture_time
            report = BoundReport(instance=f"tree[n={n},{idx}]")
            report.claims.append(make_claim("thm1-capt", got, "==", want))
            result.reports.append(report)
    rng = SplitMix64(seed)
    config = GameConfig(cop_count=1)
    for i in range(sample_count):
        n = 2 + rng.below(max_size - 1)
        tree = random_tree(n, rng.next_u64())
        want = (diameter(tree) + 1) // 2
        got = best_response_length(tree, config, one_cop_strategy(tree))
        report = BoundReport(instance=f"thm1-strategy[{i}] n={n}")
        value = -1 if is_escape(got) else got
        report.claims.append(make_claim("thm1-strategy", value, "==", want))
        result.reports.append(report)
    return result


def _pair_products(corpus) -> list[tuple[ProductGraph, str]]:
    return [(cartesian_product(t1, t2), desc) for t1, t2, desc in corpus]


def suite_theorem2(seed: int = 42, count: int = 50, max_size: int = 7) -> SuiteResult:
    """capt2 of random two-tree products equals floor(diam/2), plus the
    full diameter-chain checks."""
    result = SuiteResult("theorem2")
    for product, desc in _pair_products(tree_pair_corpus(seed, count, 2, max_size)):
        solved = solve(product.flat, 2)
        report = check_theorem2(product, solved)
        report.instance = f"{desc} {report.instance}"
        report.provenance["graph"] = product.flat
        result.reports.append(report)
    return result


def suite_corollary_grid(max_mn: int = 5) -> SuiteResult:
    """Grid capture times match floor((m+n)/2)-1 under both move orders."""
    result = SuiteResult("corollary-grid")
    for m in range(2, max_mn + 1):
        for n in range(2, max_mn + 1):
            want = (m + n) // 2 - 1
            rf, cf = capture_time_both_orders(grid_graph(m, n), 2)
            report = BoundReport(instance=f"grid[{m}x{n}]")
            report.claims.append(
                make_claim("grid-robber-first", -1 if is_escape(rf) else rf, "==", want)
            )
            report.claims.append(
                make_claim("grid-cops-first", -1 if is_escape(cf) else cf, "==", want)
            )
            report.provenance["graph"] = grid_graph(m, n)
            result.reports.append(report)
    return result


def suite_sandwich(seed: int = 42, count: int = 50, max_size: int = 7) -> SuiteResult:
    result = SuiteResult("sandwich")
    for product, desc in _pair_products(tree_pair_corpus(seed, count, 2, max_size)):
        solved = solve(product.flat, 2)
        report = check_corollaries(product, solved)
        report.instance = f"{desc} {report.instance}"
        report.provenance["graph"] = product.flat
        result.reports.append(report)
    return result


def suite_lemma3(seed: int = 42, count: int = 50, max_size: int = 7) -> SuiteResult:
    """The central-tuple distance inequality on products, grids, and the
    4-cycle."""
    result = SuiteResult("lemma3")
    instances: list[tuple[Graph, str]] = []
    for product, desc in _pair_products(tree_pair_corpus(seed, count, 2, max_size)):
        instances.append((product.flat, desc))
    for m, n in [(2, 2), (3, 3), (3, 4), (4, 5), (5, 5)]:
        instances.append((grid_graph(m, n), f"grid[{m}x{n}]"))
    instances.append((cycle_graph(4), "cycle4"))
    for g, desc in instances:
        solved = solve(g, 2)
        report = check_lemma3(g, solved)
        report.instance = f"{desc} {report.instance}"
        report.provenance["graph"] = g
        result.reports.append(report)
    return result


def suite_constructive(seed: int = 42, count: int = 50, max_size: int = 7,
                       max_mn: int = 5) -> SuiteResult:
    """Exhaustive best response against the two-cop strategy equals
    floor((d1+d2)/2) on random pairs and grids; any internal invariant
    violation or virtual-vertex move raises and fails the suite run."""
    result = SuiteResult("constructive")
    config = GameConfig(cop_count=2)
    worlds: list[tuple[ProductGraph, str]] = list(
        _pair_products(tree_pair_corpus(seed, count, 2, max_size))
    )
    for m in range(2, max_mn + 1):
        for n in range(2, max_mn + 1):
            worlds.append(
                (cartesian_product(path_graph(m), path_graph(n)), f"grid[{m}x{n}]")
            )
    for product, desc in worlds:
        want = (diameter(product.factor1) + diameter(product.factor2)) // 2
        strategy = two_cop_strategy(product)
        got = best_response_length(product.flat, config, strategy)
        report = BoundReport(instance=f"{desc} constructive")
        value = -1 if is_escape(got) else got
        report.claims.append(make_claim("constructive-capture", value, "==", want))
        report.provenance["strategy_stats"] = dict(strategy.stats)
        report.provenance["graph"] = product.flat
        report.provenance["product"] = product
        result.reports.append(report)
    return result


def suite_move_order(seed: int = 1, count: int = 20) -> SuiteResult:
    """Robber-first and cops-first capture times agree on a mixed corpus."""
    result = SuiteResult("move-order")
    rng = SplitMix64(seed)
    instances: list[tuple[Graph, int, str]] = []
    instances.append((cycle_graph(4), 2, "cycle4"))
    for m, n in [(2, 3), (3, 3), (2, 4), (3, 4), (4, 4)]:
        instances.append((grid_graph(m, n), 2, f"grid[{m}x{n}]"))
    while len(instances) < count:
        i = len(instances)
        if i % 2 == 0:
            n = 3 + rng.below(5)
            instances.append((random_tree(n, rng.next_u64()), 1, f"tree[{i}] n={n}"))
        else:
            n1 = 2 + rng.below(4)
            n2 = 2 + rng.below(4)
            product = cartesian_product(
                random_tree(n1, rng.next_u64()), random_tree(n2, rng.next_u64())
            )
            instances.append((product.flat, 2, f"product[{i}] n=({n1},{n2})"))
    for g, k, desc in instances[:count]:
        rf, cf = capture_time_both_orders(g, k)
        report = BoundReport(instance=f"{desc} k={k}")
        lhs = -1 if is_escape(rf) else rf
        rhs = -1 if is_escape(cf) else cf
        report.claims.append(make_claim("move-order-agreement", lhs, "==", rhs))
        report.provenance["graph"] = g
        result.reports.append(report)
    return result


def suite_three_trees() -> SuiteResult:
    """Capture bounds for tiny three-tree products, plus the n-tree
    upper-bound formula at a hand-checked value."""
    result = SuiteResult("three-trees")
    triples = [
        [path_graph(2), path_graph(2), path_graph(2)],
        [path_graph(2), path_graph(2), path_graph(3)],
        [path_graph(2), path_graph(3), path_graph(3)],
    ]
    for trees in triples:
        flat = cartesian_product(
            cartesian_product(trees[0], trees[1]).flat, trees[2]
        ).flat
        solved = solve(flat, 2)
        report = check_multi_tree_bounds(trees, solved)
        result.reports.append(report)
    report = BoundReport(instance="n-tree-formula[4 single edges]")
    report.claims.append(
        make_claim("formula-hand-value", n_tree_upper_bound([1, 1, 1, 1]), "==", 8)
    )
    result.reports.append(report)
    return result


SUITES = {
    "thm1": suite_thm1,
    "theorem2": suite_theorem2,
    "corollary-grid": suite_corollary_grid,
    "sandwich": suite_sandwich,
    "lemma3": suite_lemma3,
    "three-trees": suite_three_trees,
    "move-order": suite_move_order,
    "constructive": suite_constructive,
}
