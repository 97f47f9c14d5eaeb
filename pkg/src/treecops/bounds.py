"""Machine checks of the capture-time identities and inequalities.

Every claim is an exact integer comparison; reports carry PASS, FAIL,
or VACUOUS per claim.  Vacuous means the hypothesis selected nothing to
check (for example no qualifying 4-cycle vertices exist), which is
reported distinctly so corpus bugs cannot hide behind empty checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .engine import is_escape
from .graphs import Graph, bfs_distances, diameter
from .products import ProductGraph
from .solver import SolveResult, solve
from .trees import diametral_path

PASS = "PASS"
FAIL = "FAIL"
VACUOUS = "VACUOUS"

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class Claim:
    claim_id: str
    lhs: int
    relation: str
    rhs: int
    status: str

    def line(self) -> str:
        return f"CLAIM {self.claim_id} {self.lhs} {self.relation} {self.rhs} {self.status}"


def make_claim(claim_id: str, lhs: int, relation: str, rhs: int) -> Claim:
    ok = _RELATIONS[relation](lhs, rhs)
    return Claim(claim_id, lhs, relation, rhs, PASS if ok else FAIL)


def vacuous_claim(claim_id: str) -> Claim:
    return Claim(claim_id, 0, "<=", 0, VACUOUS)


@dataclass
class BoundReport:
    instance: str
    claims: list[Claim] = field(default_factory=list)
    provenance: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.claims)

    @property
    def vacuous(self) -> bool:
        return bool(self.claims) and all(c.status == VACUOUS for c in self.claims)

    def lines(self) -> list[str]:
        return [c.line() for c in self.claims]


def is_corner(g: Graph, u: int) -> bool:
    """True iff some other vertex dominates u: N[u] is a subset of N[v]."""
    nu = set(g.closed_neighborhood(u))
    for v in range(g.vertex_count):
        if v == u:
            continue
        if nu <= set(g.closed_neighborhood(v)):
            return True
    return False


def _induced_c4s(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced 4-cycles, canonically ordered, via common-neighbor pairs."""
    n = g.vertex_count
    adj = [set(g.adjacency[v]) for v in range(n)]
    seen: set[frozenset[int]] = set()
    cycles = []
    for u in range(n):
        for w in range(u + 1, n):
            if w in adj[u]:
                continue
            common = sorted(adj[u] & adj[w])
            for x, y in itertools.combinations(common, 2):
                if y in adj[x]:
                    continue
                key = frozenset((u, x, w, y))
                if key in seen:
                    continue
                seen.add(key)
                # Canonical: smallest vertex first, then its smaller neighbor.
                a = min(key)
                nb = sorted(v for v in key if v in adj[a])
                other = next(v for v in key if v != a and v not in adj[a])
                cycles.append((a, nb[0], other, nb[1]))
    return sorted(cycles)


def qualifying_c4_vertices(g: Graph) -> list[tuple[int, tuple[int, int, int, int]]]:
    """(vertex, cycle) pairs: u on an induced 4-cycle C such that no vertex
    of the graph has more than two neighbors on C."""
    out = []
    for cycle in _induced_c4s(g):
        cset = set(cycle)
        ok = True
        for v in range(g.vertex_count):
            if sum(1 for w in g.adjacency[v] if w in cset) > 2:
                ok = False
                break
        if ok:
            out.extend((u, cycle) for u in cycle)
    return sorted(out)


def check_lemma3(g: Graph, result: SolveResult) -> BoundReport:
    """d(u,c1) + d(u,c2) <= 2*capt + 1 for every central pair and every
    qualifying 4-cycle vertex u."""
    report = BoundReport(instance=f"lemma3[n={g.vertex_count}]")
    if is_escape(result.capture_time):
        raise ValueError("check_lemma3 needs a finite 2-cop capture time")
    t = result.capture_time
    report.provenance["capt2"] = t
    report.provenance["central"] = result.central_tuples
    qualifying = qualifying_c4_vertices(g)
    report.provenance["qualifying"] = len(qualifying)
    if not qualifying:
        report.claims.append(vacuous_claim("lemma3"))
        return report
    dist = {c: bfs_distances(g, c) for pair in result.central_tuples for c in pair}
    for c1, c2 in result.central_tuples:
        for u, _cycle in qualifying:
            report.claims.append(
                make_claim(
                    f"lemma3[c=({c1},{c2}),u={u}]",
                    dist[c1][u] + dist[c2][u],
                    "<=",
                    2 * t + 1,
                )
            )
    return report


def check_theorem2(product: ProductGraph, result: SolveResult) -> BoundReport:
    """capt2 of a two-tree product equals floor(diam/2), and the diameter
    chain through the corner vertices of the product holds."""
    g = product.flat
    d = diameter(g)
    report = BoundReport(instance=f"theorem2[n={g.vertex_count}]")
    if is_escape(result.capture_time):
        raise ValueError("check_theorem2 needs a finite 2-cop capture time")
    t = result.capture_time
    report.provenance["capt2"] = t
    report.provenance["diam"] = d
    report.claims.append(make_claim("theorem2-equality", t, "==", d // 2))

    # Opposite ends of the product's diametral paths are qualifying
    # 4-cycle vertices; the distance chain squeezes the diameter.
    p1 = diametral_path(product.factor1)
    p2 = diametral_path(product.factor2)
    u = product.flat_of(p1[0], p2[0])
    v = product.flat_of(p1[-1], p2[-1])
    qualifying_vertices = {q for q, _ in qualifying_c4_vertices(g)}
    report.claims.append(
        make_claim("lemma4-corner-u", int(u in qualifying_vertices), "==", 1)
    )
    report.claims.append(
        make_claim("lemma4-corner-v", int(v in qualifying_vertices), "==", 1)
    )
    for c1, c2 in result.central_tuples:
        d1 = bfs_distances(g, c1)
        d2 = bfs_distances(g, c2)
        chain = d1[u] + d1[v] + d2[u] + d2[v]
        tag = f"[c=({c1},{c2})]"
        report.claims.append(make_claim(f"lemma4-chain-lower{tag}", 2 * d, "<=", chain))
        report.claims.append(make_claim(f"lemma4-chain-upper{tag}", chain, "<=", 4 * t + 2))
    return report


def check_corollaries(product: ProductGraph, result: SolveResult) -> BoundReport:
    """The one-cop sandwich around capt2, and the grid closed form when
    both factors are paths."""
    report = BoundReport(instance=f"corollaries[n={product.flat.vertex_count}]")
    if is_escape(result.capture_time):
        raise ValueError("check_corollaries needs a finite 2-cop capture time")
    t2 = result.capture_time
    c1a = solve(product.factor1, 1).capture_time
    c1b = solve(product.factor2, 1).capture_time
    report.provenance["capt2"] = t2
    report.provenance["factor_capt1"] = (c1a, c1b)
    report.claims.append(make_claim("sandwich-lower", c1a + c1b - 1, "<=", t2))
    report.claims.append(make_claim("sandwich-upper", t2, "<=", c1a + c1b))

    def is_path(g: Graph) -> bool:
        degs = sorted(g.degree(v) for v in range(g.vertex_count))
        return g.edge_count == g.vertex_count - 1 and degs[-1] <= 2

    if is_path(product.factor1) and is_path(product.factor2):
        m = product.factor1.vertex_count
        n = product.factor2.vertex_count
        report.claims.append(make_claim("grid-formula", t2, "==", (m + n) // 2 - 1))
    return report


def n_tree_upper_bound(diameters: list[int]) -> int:
    """sum over i (1-based) of (2^ceil(i/2) - 1) * diam_i."""
    return sum(
        (2 ** ((i + 1) // 2) - 1) * d for i, d in enumerate(diameters, start=1)
    )


def three_tree_bounds(diameters: list[int]) -> tuple[int, int]:
    total = sum(diameters)
    return total // 2, 1 + total


def check_multi_tree_bounds(
    trees: list[Graph], result: SolveResult | None
) -> BoundReport:
    """Bound checks for products of three or more trees.

    With exactly three trees and a solver result for the triple product
    at two cops, checks the lower/upper capture bounds; otherwise (or
    without a result) only the arithmetic of the n-tree upper-bound
    formula is reported.
    """
    diams = [diameter(t) for t in trees]
    report = BoundReport(instance=f"multi-tree[{len(trees)} trees, diams={diams}]")
    formula = n_tree_upper_bound(diams)
    report.provenance["formula_upper_bound"] = formula
    if len(trees) == 3 and result is not None:
        if is_escape(result.capture_time):
            raise ValueError("check_multi_tree_bounds needs a finite capture time")
        lo, hi = three_tree_bounds(diams)
        capt = result.capture_time
        report.provenance["capt"] = capt
        report.claims.append(make_claim("three-trees-lower", lo, "<=", capt))
        report.claims.append(make_claim("three-trees-upper", capt, "<=", hi))
        report.claims.append(make_claim("n-tree-formula-upper", capt, "<=", formula))
    else:
        report.claims.append(vacuous_claim("multi-tree-solve"))
    return report
