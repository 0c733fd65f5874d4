import json
import subprocess
import sys

import pytest

from treecensus.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_kn(capsys):
    code, out, err = run_cli(capsys, "count", "--family", "kn:8")
    assert code == 0 and err == ""
    assert json.loads(out) == {
        "graph": {"family": "kn", "params": {"n": 8}},
        "spanning_trees": "262144",
    }


def test_count_kmn_and_flag_params(capsys):
    code, out, _ = run_cli(capsys, "count", "--family", "kmn:3,3")
    assert code == 0 and json.loads(out)["spanning_trees"] == "81"
    code, out, _ = run_cli(capsys, "count", "--family", "kmn", "--m", "3", "--n", "3")
    assert code == 0 and json.loads(out)["spanning_trees"] == "81"


def test_count_kn_minus_edge(capsys):
    code, out, _ = run_cli(capsys, "count", "--family", "kn-minus-edge:4")
    assert code == 0 and json.loads(out)["spanning_trees"] == "8"


def test_count_handles_huge_values_as_strings(capsys):
    code, out, _ = run_cli(capsys, "count", "--family", "kn:64")
    assert code == 0
    assert json.loads(out)["spanning_trees"] == str(64 ** 62)


def test_count_from_file(tmp_path, capsys):
    path = tmp_path / "disconnected.json"
    path.write_text(json.dumps({"n": 2, "edges": []}))
    code, out, _ = run_cli(capsys, "count", "--family", f"file:{path}")
    assert code == 0 and json.loads(out)["spanning_trees"] == "0"


def test_count_missing_params_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "--family", "kn")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "count", "--family", "pete:5")
    assert code == 2 and "unknown family" in err


def test_count_edge(capsys):
    code, out, _ = run_cli(capsys, "count-edge", "--family", "kn:3", "--edge", "1,2")
    assert code == 0
    assert json.loads(out) == {
        "graph": {"family": "kn", "params": {"n": 3}},
        "edge": [1, 2],
        "with_edge": "2",
        "without_edge": "1",
        "total": "3",
    }


def test_count_edge_k4(capsys):
    code, out, _ = run_cli(capsys, "count-edge", "--family", "kn:4", "--edge", "1,2")
    assert code == 0 and json.loads(out)["with_edge"] == "8"


def test_count_edge_bridge(tmp_path, capsys):
    path = tmp_path / "path.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    code, out, _ = run_cli(capsys, "count-edge", "--family", f"file:{path}",
                           "--edge", "2,3")
    doc = json.loads(out)
    assert code == 0 and doc["without_edge"] == "0" and doc["with_edge"] == doc["total"]


def test_count_edge_absent_edge(capsys):
    code, _, err = run_cli(capsys, "count-edge", "--family", "kmn:2,2",
                           "--edge", "1,2")
    assert code == 2 and "not present" in err


def test_census_all_methods_agree(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "kn:4", "--grain", "root",
                           "--method", "all")
    assert code == 0
    doc = json.loads(out)
    assert doc["agreement"] is True
    assert [t["method"] for t in doc["tables"]] == ["formula", "mtt", "oracle"]
    for table in doc["tables"]:
        assert table["entries"] == {"4": "16", "3": "8", "2": "3", "1": "0"}
        assert table["total"] == "27"


def test_census_single_method(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "kmn:2,2",
                           "--grain", "root+highest-child", "--method", "formula")
    assert code == 0
    assert json.loads(out)["entries"] == {"2": "3", "1": "1"}

    code, out, _ = run_cli(capsys, "census", "--family", "kn-minus-edge:4",
                           "--grain", "root", "--method", "mtt")
    assert code == 0
    assert json.loads(out)["entries"] == {"4": "8", "3": "3", "2": "1"}


def test_census_cell_restriction(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "kn:5", "--grain", "root",
                           "--method", "formula", "--k", "1")
    assert code == 0 and json.loads(out)["entries"] == {"4": "75"}

    code, out, _ = run_cli(capsys, "census", "--family", "kn:5",
                           "--grain", "root+highest-child", "--method", "formula",
                           "--k", "1", "--j", "2")
    assert code == 0 and json.loads(out)["entries"] == {"4,2": "24"}


def test_census_j_needs_refined_grain(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "kn:5", "--grain", "root",
                           "--method", "formula", "--j", "1")
    assert code == 2 and "--j" in err


def test_census_unsupported_grain(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "kmn:2,2",
                           "--grain", "root", "--method", "formula")
    assert code == 2 and "not defined" in err


def test_census_oracle_budget(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "kn:7", "--grain", "root",
                           "--method", "oracle", "--budget", "10")
    assert code == 2 and "budget" in err


def test_census_disagreement_exits_1(capsys, monkeypatch):
    import treecensus.cli as cli_module

    def broken(family, grain, budget, **params):
        table = cli_module.census_formula(family, grain, **params)
        entries = dict(table.entries)
        entries[next(iter(entries))] += 1
        return cli_module.CensusTable(table.family, table.params, table.grain,
                                      "oracle", entries)

    monkeypatch.setattr(cli_module, "census_oracle", broken)
    code, out, _ = run_cli(capsys, "census", "--family", "kn:4", "--grain", "root",
                           "--method", "all")
    assert code == 1 and json.loads(out)["agreement"] is False


def test_verify_single(capsys):
    code, out, _ = run_cli(capsys, "verify", "--identity", "identity1", "--n", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "identity": "identity1",
        "params": {"n": "4"},
        "lhs": "27",
        "rhs": "27",
        "holds": True,
    }


def test_verify_identity2_fixed_params(capsys):
    code, out, _ = run_cli(capsys, "verify", "--identity", "identity2",
                           "--m", "1", "--n", "2")
    assert code == 0 and json.loads(out)["holds"] is True


def test_verify_general_a(capsys):
    code, out, _ = run_cli(capsys, "verify", "--identity", "general-a",
                           "--n", "4", "--a", "7/3")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"] == {"n": "4", "a": "7/3"} and doc["holds"] is True


def test_verify_sweeps(capsys):
    code, out, _ = run_cli(capsys, "verify", "--identity", "refinement",
                           "--n-max", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == sum(n - 1 for n in range(2, 7))
    assert all(json.loads(line)["holds"] for line in lines)

    code, out, _ = run_cli(capsys, "verify", "--identity", "all",
                           "--n-max", "5", "--m-max", "3", "--a", "7/3", "--a", "-2")
    assert code == 0
    assert all(json.loads(line)["holds"] for line in out.strip().splitlines())


def test_verify_usage_errors(capsys):
    code, _, err = run_cli(capsys, "verify", "--identity", "nope", "--n", "3")
    assert code == 2 and "unknown identity" in err
    code, _, err = run_cli(capsys, "verify", "--identity", "general-a", "--n", "3")
    assert code == 2 and "--a is required" in err
    code, _, err = run_cli(capsys, "verify", "--identity", "general-a",
                           "--n", "3", "--a", "1")
    assert code == 2 and "avoid" in err
    code, _, err = run_cli(capsys, "verify", "--identity", "identity1", "--n", "1")
    assert code == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    import treecensus.cli as cli_module
    from treecensus.identities import IdentityReport

    def broken(n):
        return IdentityReport("identity1", {"n": n}, 1, 2, False, "partial sums: [2]")

    monkeypatch.setattr(cli_module, "verify_identity1", broken)
    code, out, _ = run_cli(capsys, "verify", "--identity", "identity1", "--n", "4")
    assert code == 1
    assert json.loads(out)["detail"] == "partial sums: [2]"


def test_oracle_kn(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--family", "kn:3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == "3" and len(doc["trees"]) == 3
    assert doc["graph"] == {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}
    assert doc["trees"][0] == {"edges": [[1, 2], [1, 3]]}


def test_oracle_kmn_and_file(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "oracle", "--family", "kmn:2,2")
    assert code == 0 and json.loads(out)["count"] == "4"

    path = tmp_path / "path.json"
    path.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}))
    code, out, _ = run_cli(capsys, "oracle", "--family", f"file:{path}")
    assert code == 0 and json.loads(out)["count"] == "1"


def test_oracle_budget_exceeded(capsys):
    code, _, err = run_cli(capsys, "oracle", "--family", "kn:6", "--budget", "5")
    assert code == 2 and "budget" in err


def test_oracle_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "oracle", "--family", f"file:{path}")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "oracle", "--family", "file:/no/such/file.json")
    assert code == 2


def test_output_is_byte_identical_across_invocations(capsys):
    argv = ["census", "--family", "kn:5", "--grain", "root+highest-child",
            "--method", "all"]
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "treecensus", "count", "--family", "kn:5"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["spanning_trees"] == "125"


def test_module_entry_point_usage_exit_code():
    result = subprocess.run(
        [sys.executable, "-m", "treecensus", "count"],
        capture_output=True, text=True,
    )
    assert result.returncode == 2
