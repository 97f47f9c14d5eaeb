import itertools

from treecops import (
    build_graph,
    cartesian_product,
    cycle_graph,
    diameter,
    grid_graph,
    path_graph,
    random_tree,
    solve,
    star_graph,
)
from treecops.bounds import (
    FAIL,
    PASS,
    VACUOUS,
    check_corollaries,
    check_lemma3,
    check_multi_tree_bounds,
    check_theorem2,
    is_corner,
    make_claim,
    n_tree_upper_bound,
    qualifying_c4_vertices,
    three_tree_bounds,
    vacuous_claim,
)


def test_claim_statuses_and_lines():
    claim = make_claim("x", 2, "<=", 5)
    assert claim.status == PASS
    assert claim.line() == "CLAIM x 2 <= 5 PASS"
    assert make_claim("x", 6, "<=", 5).status == FAIL
    assert vacuous_claim("y").line() == "CLAIM y 0 <= 0 VACUOUS"


def test_corner_path_endpoint():
    assert is_corner(path_graph(3), 0)          # dominated by the center
    assert not is_corner(path_graph(3), 1)


def test_corner_grid_vertex_is_not_dominated():
    g = grid_graph(3, 3)
    assert not is_corner(g, 0)
    assert not any(is_corner(g, u) for u in range(9))


def test_corner_cycle4_has_none():
    assert not any(is_corner(cycle_graph(4), u) for u in range(4))


def test_corner_invariant_under_relabeling():
    # Reverse the vertex labels of a small tree and compare.
    t = random_tree(7, 21)
    n = t.vertex_count
    relabeled = build_graph(n, [(n - 1 - u, n - 1 - v) for u, v in t.edges()])
    for u in range(n):
        assert is_corner(t, u) == is_corner(relabeled, n - 1 - u)


def _qualifying_by_subsets(g):
    # Independent 4-subset brute force used as the test oracle.
    out = set()
    for sub in itertools.combinations(range(g.vertex_count), 4):
        degs = [sum(1 for w in sub if g.has_edge(v, w)) for v in sub]
        if degs != [2, 2, 2, 2]:
            continue
        if any(
            sum(1 for w in g.adjacency[v] if w in sub) > 2
            for v in range(g.vertex_count)
        ):
            continue
        out.update(sub)
    return out


def test_qualifying_c4_on_cycle4():
    got = qualifying_c4_vertices(cycle_graph(4))
    assert sorted({u for u, _ in got}) == [0, 1, 2, 3]


def test_qualifying_c4_on_tree_is_empty():
    assert qualifying_c4_vertices(path_graph(5)) == []


def test_qualifying_c4_grid_corner_square():
    g = grid_graph(3, 3)
    got = qualifying_c4_vertices(g)
    vertices = {u for u, _ in got}
    assert 0 in vertices
    assert any(set(cycle) == {0, 1, 3, 4} for _, cycle in got)


def test_qualifying_c4_matches_subset_oracle():
    for g in [
        cycle_graph(4),
        cycle_graph(5),
        grid_graph(2, 3),
        grid_graph(3, 3),
        cartesian_product(random_tree(4, 2), random_tree(3, 5)).flat,
        star_graph(5),
    ]:
        got = {u for u, _ in qualifying_c4_vertices(g)}
        assert got == _qualifying_by_subsets(g)


def test_qualifying_cycles_are_induced():
    g = grid_graph(4, 4)
    for _, cycle in qualifying_c4_vertices(g):
        a, b, c, d = cycle
        assert g.has_edge(a, b) and g.has_edge(b, c)
        assert g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)


def test_lemma3_on_grid3x3():
    g = grid_graph(3, 3)
    report = check_lemma3(g, solve(g, 2))
    assert report.claims and report.passed and not report.vacuous


def test_lemma3_on_cycle4():
    g = cycle_graph(4)
    result = solve(g, 2)
    assert result.capture_time == 1
    report = check_lemma3(g, result)
    assert report.passed
    # capt = 1: every distance sum is at most 3.
    for claim in report.claims:
        assert claim.rhs == 3


def test_lemma3_vacuous_on_tree_product_free_graph():
    t = random_tree(6, 4)
    report = check_lemma3(t, solve(t, 2))
    assert report.vacuous


def test_lemma3_explicit_corners_of_p4_x_p3():
    prod = cartesian_product(path_graph(4), path_graph(3))
    g = prod.flat
    report = check_lemma3(g, solve(g, 2))
    assert report.passed
    vertices = {u for u, _ in qualifying_c4_vertices(g)}
    assert prod.flat_of(0, 0) in vertices
    assert prod.flat_of(3, 2) in vertices


def test_theorem2_on_p4_x_p3():
    prod = cartesian_product(path_graph(4), path_graph(3))
    result = solve(prod.flat, 2)
    assert result.capture_time == 2
    report = check_theorem2(prod, result)
    assert report.passed
    eq = [c for c in report.claims if c.claim_id == "theorem2-equality"][0]
    assert (eq.lhs, eq.rhs) == (2, 2)


def test_theorem2_on_star_x_edge():
    prod = cartesian_product(star_graph(4), path_graph(2))
    result = solve(prod.flat, 2)
    assert diameter(prod.flat) == 3
    assert result.capture_time == 1
    assert check_theorem2(prod, result).passed


def test_corollaries_p3_x_p3():
    prod = cartesian_product(path_graph(3), path_graph(3))
    report = check_corollaries(prod, solve(prod.flat, 2))
    assert report.passed
    assert report.provenance["factor_capt1"] == (1, 1)
    ids = [c.claim_id for c in report.claims]
    assert "grid-formula" in ids


def test_corollaries_p2_x_p2():
    prod = cartesian_product(path_graph(2), path_graph(2))
    report = check_corollaries(prod, solve(prod.flat, 2))
    assert report.passed


def test_corollaries_grid_4x5_formula():
    prod = cartesian_product(path_graph(4), path_graph(5))
    result = solve(prod.flat, 2)
    assert result.capture_time == (4 + 5) // 2 - 1 == 3
    assert check_corollaries(prod, result).passed


def test_corollaries_non_path_factors_skip_grid_formula():
    prod = cartesian_product(star_graph(4), path_graph(3))
    report = check_corollaries(prod, solve(prod.flat, 2))
    assert report.passed
    assert "grid-formula" not in [c.claim_id for c in report.claims]


def test_n_tree_formula_hand_value():
    assert n_tree_upper_bound([1, 1, 1, 1]) == 8
    assert n_tree_upper_bound([1]) == 1
    assert n_tree_upper_bound([2, 3]) == 2 + 3


def test_three_tree_bounds_values():
    assert three_tree_bounds([1, 1, 1]) == (1, 4)
    assert three_tree_bounds([1, 1, 2]) == (2, 5)


def test_multi_tree_three_edges():
    trees = [path_graph(2)] * 3
    flat = cartesian_product(cartesian_product(trees[0], trees[1]).flat, trees[2]).flat
    report = check_multi_tree_bounds(trees, solve(flat, 2))
    assert report.passed
    capt = report.provenance["capt"]
    assert 1 <= capt <= 4


def test_multi_tree_formula_only_for_many_trees():
    report = check_multi_tree_bounds([path_graph(2)] * 4, None)
    assert report.vacuous
    assert report.provenance["formula_upper_bound"] == 8


def test_report_serialization_shape():
    # "CLAIM <id> <lhs> <rel> <rhs> <status>"
    g = grid_graph(3, 3)
    report = check_lemma3(g, solve(g, 2))
    for line in report.lines():
        parts = line.split()
        assert len(parts) == 6
        assert parts[0] == "CLAIM"
        int(parts[2])
        assert parts[3] in {"<=", "==", ">="}
        int(parts[4])
        assert parts[5] in {PASS, FAIL, VACUOUS}
