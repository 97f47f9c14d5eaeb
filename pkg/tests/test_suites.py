from treecops.suites import (
    SUITES,
    suite_constructive,
    suite_corollary_grid,
    suite_lemma3,
    suite_move_order,
    suite_sandwich,
    suite_theorem2,
    suite_thm1,
    suite_three_trees,
    tree_pair_corpus,
)


def test_registry_names():
    assert set(SUITES) == {
        "thm1", "theorem2", "corollary-grid", "sandwich", "lemma3",
        "three-trees", "move-order", "constructive",
    }


def test_corpus_deterministic_and_sized():
    a = tree_pair_corpus(7, 5, 2, 6)
    b = tree_pair_corpus(7, 5, 2, 6)
    assert [(t1.adjacency, t2.adjacency) for t1, t2, _ in a] == [
        (t1.adjacency, t2.adjacency) for t1, t2, _ in b
    ]
    for t1, t2, desc in a:
        assert 2 <= t1.vertex_count <= 6
        assert 2 <= t2.vertex_count <= 6
        assert desc.startswith("pair[")


def test_thm1_small():
    result = suite_thm1(max_size=5, sample_count=10, seed=2)
    assert result.passed
    npass, nfail, nvac = result.counts()
    assert nfail == 0 and nvac == 0
    # 1 + 3 + 16 + 125 trees plus the 10 strategy samples.
    assert len(result.reports) == 145 + 10


def test_theorem2_small():
    result = suite_theorem2(seed=4, count=5, max_size=5)
    assert result.passed and len(result.reports) == 5


def test_corollary_grid_small():
    result = suite_corollary_grid(max_mn=4)
    assert result.passed and len(result.reports) == 9


def test_sandwich_small():
    assert suite_sandwich(seed=4, count=5, max_size=5).passed


def test_lemma3_small():
    result = suite_lemma3(seed=4, count=4, max_size=5)
    assert result.passed
    assert result.counts()[2] >= 0  # vacuous instances are counted, not hidden


def test_move_order_small():
    assert suite_move_order(seed=1, count=10).passed


def test_three_trees():
    result = suite_three_trees()
    assert result.passed
    assert len(result.reports) == 4


def test_constructive_small():
    result = suite_constructive(seed=4, count=4, max_size=5, max_mn=3)
    assert result.passed
    for report in result.reports:
        stats = report.provenance["strategy_stats"]
        assert stats["responses"] > 0


def test_summary_line_format():
    result = suite_three_trees()
    line = result.summary()
    assert line.startswith("SUMMARY suite=three-trees reports=4 pass=")
