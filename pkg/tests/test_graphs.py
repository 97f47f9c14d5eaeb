import pytest
from hypothesis import given, settings, strategies as st

from treecops import (
    GraphError,
    add_leaf,
    bfs_distances,
    build_graph,
    cartesian_product,
    diameter,
    diametral_path,
    eccentricity,
    format_graph,
    grid_graph,
    is_descendant,
    parse_graph,
    path_graph,
    random_tree,
    root_tree,
    star_graph,
    step_toward,
    tree_diameter,
)


def test_build_path2():
    g = build_graph(2, [(0, 1)])
    assert g.adjacency == ((1,), (0,))


def test_build_4cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count == 4
    assert all(g.degree(v) == 2 for v in range(4))


def test_build_disconnected_rejected():
    with pytest.raises(GraphError, match="disconnected"):
        build_graph(3, [(0, 1)])


def test_build_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(2, [(0, 0), (0, 1)])


def test_build_out_of_range_rejected():
    with pytest.raises(GraphError, match="out of range"):
        build_graph(2, [(0, 2)])


def test_build_duplicate_edges_merged():
    g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_bfs_path():
    assert bfs_distances(path_graph(4), 0) == [0, 1, 2, 3]


def test_bfs_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert bfs_distances(g, 0) == [0, 1, 2, 1]


def test_bfs_grid_corner():
    assert max(bfs_distances(grid_graph(3, 3), 0)) == 4


def test_diameter_path():
    for n in range(2, 8):
        assert diameter(path_graph(n)) == n - 1


def test_diameter_single_edge():
    assert diameter(path_graph(2)) == 1


def test_product_diameter_adds():
    prod = cartesian_product(path_graph(3), path_graph(4))
    assert diameter(prod.flat) == 5


def test_diametral_path_on_path():
    assert diametral_path(path_graph(3)) in ([0, 1, 2], [2, 1, 0])


def test_diametral_path_star():
    path = diametral_path(star_graph(4))
    assert len(path) == 3
    assert path[1] == 0  # center


def test_diametral_path_random_tree_matches_all_pairs_oracle():
    t = random_tree(9, 7)
    # Independent oracle: diameter by exhaustive all-pairs BFS.
    oracle = max(max(bfs_distances(t, s)) for s in range(9))
    assert len(diametral_path(t)) - 1 == oracle
    assert tree_diameter(t) == oracle


def test_diametral_path_rejects_single_vertex():
    g = build_graph(1, [])
    with pytest.raises(GraphError):
        diametral_path(g)


def test_step_toward():
    p = path_graph(4)
    assert step_toward(p, 0, 3) == 1
    assert step_toward(p, 0, 1) == 1
    star = star_graph(4)
    assert step_toward(star, 1, 2) == 0


def test_step_toward_same_vertex_rejected():
    with pytest.raises(GraphError):
        step_toward(path_graph(3), 1, 1)


def test_root_tree_path_heights():
    rt = root_tree(path_graph(5), 4)
    assert rt.height[4] == 4
    assert rt.height[0] == 0
    assert rt.depth[0] == 4


def test_root_tree_star():
    rt = root_tree(star_graph(4), 0)
    assert rt.height[0] == 1
    assert all(rt.height[v] == 0 for v in (1, 2, 3))


def test_root_tree_center_pair_heights():
    # Path on 2m+2 vertices rooted at the far middle vertex: the middle
    # pair has heights m and m+1.
    for m in (1, 2, 3):
        p = path_graph(2 * m + 2)
        rt = root_tree(p, m + 1)
        assert rt.height[m] == m
        assert rt.height[m + 1] == m + 1


def test_is_descendant():
    rt = root_tree(path_graph(5), 4)
    assert is_descendant(rt, 2, 0)
    assert not is_descendant(rt, 0, 2)
    for v in range(5):
        assert is_descendant(rt, v, v)
        assert is_descendant(rt, 4, v)


def test_add_leaf():
    g = add_leaf(path_graph(3), 2)
    assert g.vertex_count == 4
    assert g.has_edge(2, 3)
    assert diameter(g) == 3


def test_graph_text_roundtrip():
    g = grid_graph(2, 3)
    text = format_graph(g)
    assert text.splitlines()[0] == "6 7"
    assert parse_graph(text).adjacency == g.adjacency


def test_graph_text_comments_skipped():
    g = parse_graph("# a comment\n2 1\n0 1\n")
    assert g.vertex_count == 2


def test_graph_text_bad_header():
    with pytest.raises(GraphError):
        parse_graph("2\n0 1\n")


# --- properties ---------------------------------------------------------------

tree_instances = st.builds(
    random_tree,
    st.integers(min_value=2, max_value=12),
    st.integers(min_value=0, max_value=2**32),
)


@given(tree_instances)
@settings(max_examples=60, deadline=None)
def test_distances_symmetric_and_triangle(t):
    n = t.vertex_count
    dist = [bfs_distances(t, s) for s in range(n)]
    for u in range(n):
        for v in range(n):
            assert dist[u][v] == dist[v][u]
            for w in range(n):
                assert dist[u][w] <= dist[u][v] + dist[v][w]


@given(tree_instances, tree_instances)
@settings(max_examples=30, deadline=None)
def test_product_diameter_additive(t1, t2):
    prod = cartesian_product(t1, t2)
    assert diameter(prod.flat) == diameter(t1) + diameter(t2)


@given(tree_instances)
@settings(max_examples=60, deadline=None)
def test_diametral_endpoints_are_leaves(t):
    path = diametral_path(t)
    assert len(path) - 1 == diameter(t)
    assert t.degree(path[0]) == 1
    assert t.degree(path[-1]) == 1


@given(tree_instances, st.data())
@settings(max_examples=60, deadline=None)
def test_rooted_heights_strictly_decrease(t, data):
    root = data.draw(st.integers(min_value=0, max_value=t.vertex_count - 1))
    rt = root_tree(t, root)
    for v in range(t.vertex_count):
        if v != root:
            assert rt.height[rt.parent[v]] >= rt.height[v] + 1
        assert (rt.height[v] == 0) == (len(rt.children[v]) == 0)


@given(tree_instances, st.data())
@settings(max_examples=60, deadline=None)
def test_step_toward_walk_has_exact_length(t, data):
    n = t.vertex_count
    u = data.draw(st.integers(min_value=0, max_value=n - 1))
    v = data.draw(st.integers(min_value=0, max_value=n - 1))
    d = bfs_distances(t, u)[v]
    cur, steps = u, 0
    while cur != v:
        cur = step_toward(t, cur, v)
        steps += 1
    assert steps == d


@given(tree_instances, st.data())
@settings(max_examples=40, deadline=None)
def test_center_has_small_eccentricity(t, data):
    # Eccentricity of the diametral-path center vertex never exceeds
    # ceil(diam / 2).
    from treecops import center_start

    d = diameter(t)
    assert eccentricity(t, center_start(t)) <= (d + 1) // 2
