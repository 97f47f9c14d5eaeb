from treecops.cli import (
    BUDGET_ENV,
    EXIT_BUDGET,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_VERIFY_FAIL,
    load_graph_source,
    main,
)
from treecops import parse_graph, parse_trace


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_gen_grid(tmp_path, capsys):
    out = tmp_path / "g.g"
    rc, _, _ = run_cli(capsys, "gen", "--kind", "grid", "--m", "3", "--n", "3", "--out", str(out))
    assert rc == EXIT_OK
    g = parse_graph(out.read_text())
    assert g.vertex_count == 9 and g.edge_count == 12


def test_gen_random_tree_deterministic(capsys):
    rc1, out1, _ = run_cli(capsys, "gen", "--kind", "random-tree", "--n", "7", "--seed", "5")
    rc2, out2, _ = run_cli(capsys, "gen", "--kind", "random-tree", "--n", "7", "--seed", "5")
    assert rc1 == rc2 == EXIT_OK
    assert out1 == out2
    g = parse_graph(out1)
    assert g.vertex_count == 7 and g.edge_count == 6


def test_gen_product(tmp_path, capsys):
    a = tmp_path / "a.g"
    b = tmp_path / "b.g"
    run_cli(capsys, "gen", "--kind", "path", "--n", "4", "--out", str(a))
    run_cli(capsys, "gen", "--kind", "path", "--n", "3", "--out", str(b))
    rc, out, _ = run_cli(capsys, "gen", "--kind", "product", "--a", str(a), "--b", str(b))
    assert rc == EXIT_OK
    assert parse_graph(out).vertex_count == 12


def test_solve_grid(tmp_path, capsys):
    gfile = tmp_path / "grid.g"
    run_cli(capsys, "gen", "--kind", "grid", "--m", "3", "--n", "3", "--out", str(gfile))
    rc, out, err = run_cli(capsys, "solve", "--graph", str(gfile), "--cops", "2")
    assert rc == EXIT_OK
    assert "capt=2" in out
    assert "central:" in out
    assert "time=" in err  # wall time stays off stdout


def test_solve_escape(capsys):
    rc, out, _ = run_cli(capsys, "solve", "--graph", "grid:2x2", "--cops", "1")
    assert rc == EXIT_OK
    assert "capt=ESCAPE" in out


def test_solve_path4(capsys):
    rc, out, _ = run_cli(capsys, "solve", "--graph", "path:4", "--cops", "1")
    assert rc == EXIT_OK
    assert "capt=2" in out
    assert "(1) (2)" in out


def test_solve_dump_table(tmp_path, capsys):
    dump = tmp_path / "table.txt"
    rc, _, _ = run_cli(
        capsys, "solve", "--graph", "path:3", "--cops", "1", "--dump-table", str(dump)
    )
    assert rc == EXIT_OK
    lines = dump.read_text().splitlines()
    assert lines and all(len(line.split()) == 3 for line in lines)


def test_solve_budget_exit_code(capsys):
    rc, _, err = run_cli(
        capsys, "solve", "--graph", "grid:3x3", "--cops", "2", "--budget", "10"
    )
    assert rc == EXIT_BUDGET
    assert "budget" in err


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "10")
    rc, _, _ = run_cli(capsys, "solve", "--graph", "grid:3x3", "--cops", "2")
    assert rc == EXIT_BUDGET
    monkeypatch.setenv(BUDGET_ENV, "100000000")
    rc, _, _ = run_cli(capsys, "solve", "--graph", "grid:3x3", "--cops", "2")
    assert rc == EXIT_OK


def test_solve_missing_graph(capsys):
    rc, _, err = run_cli(capsys, "solve", "--graph", "missing.g", "--cops", "1")
    assert rc == EXIT_INPUT
    assert "missing.g" in err


def test_simulate_lemma2_vs_optimal(tmp_path, capsys):
    out = tmp_path / "trace.txt"
    rc, stdout, _ = run_cli(
        capsys,
        "simulate", "--t1", "path:4", "--t2", "path:3",
        "--cops", "lemma2", "--robber", "optimal", "--out", str(out),
    )
    assert rc == EXIT_OK
    assert stdout.strip().startswith("CAPTURED")
    round_taken = int(stdout.split()[1])
    assert round_taken <= 2
    raw = parse_trace(out.read_text())
    assert raw.cop_count == 2
    assert raw.outcome_captured
    assert raw.placement[0].startswith("(")  # product rendering


def test_simulate_thm1(capsys):
    rc, out, _ = run_cli(
        capsys, "simulate", "--t1", "path:5", "--cops", "thm1", "--robber", "optimal"
    )
    assert rc == EXIT_OK
    assert "CAPTURED 2" in out


def test_simulate_random_robber_reproducible(capsys):
    args = ("simulate", "--t1", "path:5", "--cops", "thm1", "--robber", "random", "--seed", "9")
    rc1, out1, _ = run_cli(capsys, *args)
    rc2, out2, _ = run_cli(capsys, *args)
    assert rc1 == rc2 == EXIT_OK
    assert out1 == out2


def test_simulate_strategy_mismatch(capsys):
    rc, _, err = run_cli(
        capsys, "simulate", "--t1", "grid:3x3", "--cops", "thm1", "--robber", "optimal"
    )
    assert rc == EXIT_INPUT
    assert "thm1" in err


def test_verify_corollary_grid_passes(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--suite", "corollary-grid", "--max", "4")
    assert rc == EXIT_OK
    assert "SUMMARY suite=corollary-grid" in out
    assert "fail=0" in out
    assert "CLAIM grid-robber-first" in out


def test_verify_unknown_suite(capsys):
    rc, _, err = run_cli(capsys, "verify", "--suite", "nope")
    assert rc == EXIT_INPUT
    assert "unknown suite" in err


def test_verify_move_order_small(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--suite", "move-order", "--count", "8", "--seed", "1")
    assert rc == EXIT_OK
    assert "fail=0" in out


def test_verify_three_trees(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--suite", "three-trees")
    assert rc == EXIT_OK
    assert "formula-hand-value 8 == 8 PASS" in out


def test_verify_theorem2_tiny_run_deterministic(capsys, tmp_path):
    args = ("verify", "--suite", "theorem2", "--seed", "3", "--count", "4",
            "--max-size", "5", "--out", str(tmp_path / "f"))
    rc1, out1, _ = run_cli(capsys, *args)
    rc2, out2, _ = run_cli(capsys, *args)
    assert rc1 == rc2 == EXIT_OK
    assert out1 == out2


def test_verify_failure_writes_counterexample(capsys, tmp_path, monkeypatch):
    # Sabotage one suite through its claim builder to exercise the
    # failure path end to end.
    import treecops.suites as suites

    original = suites.make_claim

    def broken(claim_id, lhs, relation, rhs):
        if claim_id == "grid-robber-first":
            return original(claim_id, lhs + 1, relation, rhs)
        return original(claim_id, lhs, relation, rhs)

    monkeypatch.setattr(suites, "make_claim", broken)
    rc, out, err = run_cli(
        capsys, "verify", "--suite", "corollary-grid", "--max", "2",
        "--out", str(tmp_path / "fails"),
    )
    assert rc == EXIT_VERIFY_FAIL
    assert "fail=1" in out
    failure_dir = tmp_path / "fails" / "corollary-grid"
    files = sorted(p.name for p in failure_dir.iterdir())
    assert "failure-0.txt" in files
    assert "failure-0.g" in files
    parse_graph((failure_dir / "failure-0.g").read_text())


def test_verify_constructive_failure_writes_trace(capsys, tmp_path, monkeypatch):
    import treecops.suites as suites

    original = suites.make_claim

    def broken(claim_id, lhs, relation, rhs):
        if claim_id == "constructive-capture":
            return original(claim_id, lhs + 1, relation, rhs)
        return original(claim_id, lhs, relation, rhs)

    monkeypatch.setattr(suites, "make_claim", broken)
    rc, _, _ = run_cli(
        capsys, "verify", "--suite", "constructive", "--count", "1",
        "--max-size", "4", "--max", "2", "--out", str(tmp_path / "fails"),
    )
    assert rc == EXIT_VERIFY_FAIL
    failure_dir = tmp_path / "fails" / "constructive"
    traces = sorted(p.name for p in failure_dir.glob("*.trace"))
    assert traces, "expected a replayable trace next to the failing report"
    raw = parse_trace((failure_dir / traces[0]).read_text())
    assert raw.cop_count == 2 and raw.outcome_captured


def test_verify_invariant_violation_exits_one(capsys, monkeypatch):
    import treecops.suites as suites
    from treecops.tree_strategies import StrategyInvariantError

    def exploding(*args, **kwargs):
        raise StrategyInvariantError("synthetic violation")

    monkeypatch.setattr(suites, "best_response_length", exploding)
    rc, _, err = run_cli(
        capsys, "verify", "--suite", "constructive", "--count", "1",
        "--max-size", "3", "--max", "2",
    )
    assert rc == EXIT_VERIFY_FAIL
    assert "invariant violation" in err


def test_load_graph_source_specs():
    assert load_graph_source("path:5").vertex_count == 5
    assert load_graph_source("grid:2x3").vertex_count == 6
    assert load_graph_source("tree:6:9").vertex_count == 6
