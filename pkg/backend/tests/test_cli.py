"""
Tests for the command-line interface and its exit codes.
"""

import json

from app.main import main


def _fixture(fixtures_dir, name):
    return str(fixtures_dir / name)


def test_compile_prints_statistics(fixtures_dir, tmp_path, capsys):
    graph_path = tmp_path / "graph.json"
    code = main([
        "compile", _fixture(fixtures_dir, "patrol.json"),
        "--dot", str(tmp_path / "dot"), "--graph", str(graph_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "aux_distance: 2" in out
    assert "accepting_cycle: True" in out
    assert (tmp_path / "dot" / "nba.dot").read_text().startswith("digraph")
    assert (tmp_path / "dot" / "graph.dot").exists()
    assert json.loads(graph_path.read_text())["initial"] == "aux"


def test_compile_infeasible_exit_code(fixtures_dir, capsys):
    code = main(["compile", _fixture(fixtures_dir, "shared_region.json")])
    assert code == 2
    assert "disconnected graph G" in capsys.readouterr().err


def test_run_writes_outputs(fixtures_dir, tmp_path, capsys):
    trace = tmp_path / "trace.jsonl"
    metrics = tmp_path / "metrics.json"
    pgm = tmp_path / "map.pgm"
    code = main([
        "run", _fixture(fixtures_dir, "minimal.json"),
        "--trace", str(trace), "--metrics", str(metrics), "--map", str(pgm), "--check-invariants",
    ])
    assert code == 0
    assert "outcome: satisfied" in capsys.readouterr().out
    first = json.loads(trace.read_text().splitlines()[0])
    assert first["tick"] == 0
    assert json.loads(metrics.read_text())["outcome"] == "satisfied"
    assert pgm.read_text().startswith("P2\n5 5\n255\n")


def test_run_out_of_budget_exit_code(fixtures_dir, capsys):
    code = main(["run", _fixture(fixtures_dir, "sequence.json"), "--budget", "1"])
    assert code == 3
    assert "outcome: budget-exhausted" in capsys.readouterr().out


def test_check_reports_cross_robot_clause(capsys):
    code = main(["check", "F ((pi_1_l1 | pi_2_l1) & pi_1_l2)"])
    assert code == 0
    out = capsys.readouterr().out
    assert "spans robots {1,2}" in out
    assert "all guards robot-separable: no" in out
    assert "accepting cycle reachable: yes" in out


def test_check_separable_formula(capsys):
    assert main(["check", "G F pi_1_l1 & G F pi_2_l2"]) == 0
    out = capsys.readouterr().out
    assert "all guards robot-separable: yes" in out


def test_oracle_agrees(capsys):
    assert main(["oracle", "pi_1_a U (pi_1_b & G F pi_2_a)", "--words", "20", "--quiet"]) == 0
    assert "mismatches: 0" in capsys.readouterr().out
    assert main(["oracle", "G F pi_1_a", "--words", "20", "--quiet", "--feasible", "--seed", "3"]) == 0


def test_errors_exit_with_one(fixtures_dir, tmp_path, capsys):
    assert main(["check", "G (pi_1_a -> X pi_1_b)"]) == 1
    assert "next operator" in capsys.readouterr().err.lower()
    assert main(["run", str(tmp_path / "absent.json")]) == 1
    assert main(["--log-level", "chatty", "compile", _fixture(fixtures_dir, "minimal.json")]) == 1
    assert main(["no-such-command"]) == 1


def test_hoa_with_unknown_robot_exits_with_one(fixtures_dir, tmp_path, capsys):
    hoa = (fixtures_dir / "g_a.hoa").read_text().replace('AP: 1 "a"', 'AP: 1 "pi_2_l1"').replace("[0] 0", "[!0] 0")
    (tmp_path / "g_a.hoa").write_text(hoa)
    scenario = json.loads((fixtures_dir / "hoa_scenario.json").read_text())
    del scenario["atom_map"]
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario))
    assert main(["run", str(path)]) == 1
    assert "hoa: automaton uses undeclared predicates pi_2_l1" in capsys.readouterr().err
