import json

import pytest

import klrpoly.cli as cli
from klrpoly.cli import main
from klrpoly.poly import ONE


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- rpoly ---------------------------------------------------------------------

def test_rpoly_rtilde_golden(capsys):
    code, out, _ = run(capsys, "rpoly", "2354167", "3456172", "--kind", "rtilde")
    assert code == 0
    assert out.strip() == "q^4"


def test_rpoly_r_diagonal(capsys):
    code, out, _ = run(capsys, "rpoly", "123", "123", "--kind", "r")
    assert code == 0
    assert out.strip() == "1"


def test_rpoly_r_cover(capsys):
    code, out, _ = run(capsys, "rpoly", "123", "213", "--kind", "r")
    assert code == 0
    assert out.strip() == "q-1"


def test_rpoly_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "rpoly", "99", "123")
    assert code == 2
    assert "error:" in err


def test_rpoly_mismatched_sizes_exit_2(capsys):
    code, _, err = run(capsys, "rpoly", "12", "123")
    assert code == 2
    assert "different groups" in err


# --- verify ----------------------------------------------------------------------

def test_verify_inversion_small(capsys):
    code, out, _ = run(capsys, "verify", "inversion", "--all-n", "3")
    assert code == 0
    assert "pass" in out
    assert "pairs_checked=19" in out


def test_verify_refinement_interval_with_k(capsys):
    code, out, _ = run(capsys, "verify", "refinement", "--interval", "2354167", "3564271", "--k", "3")
    assert code == 0
    assert "pass, sum -q^5" in out


def test_verify_equidist_interval(capsys):
    code, out, _ = run(capsys, "verify", "equidist", "--interval", "123", "321")
    assert code == 0
    assert "census (3,3)" in out


def test_verify_dyer_interval(capsys):
    code, out, _ = run(capsys, "verify", "dyer", "--interval", "2314", "4312")
    assert code == 0
    assert "pass" in out


def test_verify_over_budget_exits_2(capsys):
    code, _, err = run(capsys, "verify", "inversion", "--all-n", "6")
    assert code == 2
    assert "--max-n 6" in err


def test_verify_max_n_raises_the_budget(capsys):
    code, out, _ = run(capsys, "verify", "changevar", "--all-n", "2", "--max-n", "2")
    assert code == 0
    assert "pass" in out


def test_verify_json_report_schema(capsys):
    code, out, _ = run(capsys, "verify", "inversion", "--all-n", "2", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "kl-rpoly/1"
    assert report["kind"] == "run-report"
    assert report["status"] == "pass"
    assert report["command"] == "verify"
    assert report["parameters"]["target"] == "inversion"
    assert report["counters"]["pairs_checked"] == 3
    assert report["failures"] == []
    assert report["elapsed_seconds"] >= 0


def test_verify_counterexamples_print_and_exit_1(capsys, monkeypatch):
    # Force a wrong value through the pipeline to exercise fail reporting.
    monkeypatch.setattr(cli, "inversion_sum", lambda u, v, table=None: ONE)
    code, out, _ = run(capsys, "verify", "inversion", "--all-n", "2")
    assert code == 1
    assert "fail" in out
    assert "counterexample:" in out
    failure = json.loads(out.splitlines()[-1].split("counterexample: ", 1)[1])
    assert failure["u"] == "12" and failure["v"] == "21"
    assert failure["got"] == "1" and failure["want"] == "0"


def test_verify_threads_env_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("KLRPOLY_THREADS", "4")
    code, out, _ = run(capsys, "verify", "inversion", "--all-n", "2")
    assert code == 0
    monkeypatch.setenv("KLRPOLY_THREADS", "0")
    code, _, err = run(capsys, "verify", "inversion", "--all-n", "2")
    assert code == 2
    assert "KLRPOLY_THREADS" in err
    monkeypatch.setenv("KLRPOLY_THREADS", "many")
    code, _, err = run(capsys, "verify", "inversion", "--all-n", "2")
    assert code == 2


# --- graph -----------------------------------------------------------------------

def test_graph_dot_s3(capsys):
    code, out, _ = run(capsys, "graph", "3", "--format", "dot")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "digraph bruhat {"
    assert lines[-1] == "}"
    node_lines = [line for line in lines if "->" not in line and '"' in line]
    edge_lines = [line for line in lines if "->" in line]
    assert len(node_lines) == 6
    assert len(edge_lines) == 9
    assert '  "123" -> "321" [label="(1,3)"];' in lines


def test_graph_json_s1(capsys):
    code, out, _ = run(capsys, "graph", "1", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "kl-rpoly/1"
    assert document["nodes"] == ["1"]
    assert document["edges"] == []


def test_graph_json_s4_edge_count_is_consistent(capsys):
    code, out, _ = run(capsys, "graph", "4", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert len(document["nodes"]) == 24
    assert len(document["edges"]) == 24 * 6 // 2


def test_graph_over_guard_exits_2(capsys):
    code, _, err = run(capsys, "graph", "7")
    assert code == 2
    assert "error:" in err


# --- paths -----------------------------------------------------------------------

def test_paths_text_includes_worked_path(capsys):
    code, out, _ = run(capsys, "paths", "2314", "4312", "--direction", "inc")
    assert code == 0
    assert "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312" in out


def test_paths_trivial(capsys):
    code, out, _ = run(capsys, "paths", "123", "123", "--direction", "inc")
    assert code == 0
    assert out.strip() == "123"


def test_paths_vpaths_shows_partner_bottoms(capsys):
    code, out, _ = run(capsys, "paths", "1234", "4312", "--vpaths")
    assert code == 0
    assert (
        "+ 1234 -(2,3)-> 1324 -(1,3)-> [2314] -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312"
        in out
    )
    assert (
        "- 1234 -(2,3)-> 1324 -(1,3)-> 2314 -(1,2)-> [3214] -(1,4)-> 4213 -(2,4)-> 4312"
        in out
    )


def test_paths_json_schema(capsys):
    code, out, _ = run(capsys, "paths", "123", "321", "--direction", "inc", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "kl-rpoly/1"
    assert document["kind"] == "paths"
    assert len(document["items"]) == 2


def test_paths_vpaths_incomparable_exits_2(capsys):
    code, _, err = run(capsys, "paths", "213", "132", "--vpaths")
    assert code == 2
    assert "error:" in err


# --- classify and table ------------------------------------------------------------

def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "2354167", "3564271")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "kl-rpoly/1"
    assert document["is_s_interval"] is True
    assert document["differing_positions"] == [1, 2, 3, 5, 6, 7]
    assert document["m"] == 1


def test_classify_rejects_equal(capsys):
    code, _, err = run(capsys, "classify", "123", "123")
    assert code == 2


def test_table_csv_small(capsys):
    code, out, _ = run(capsys, "table", "2")
    assert code == 0
    assert out.splitlines() == ["u,v,rtilde", "12,12,1", "12,21,q", "21,21,1"]


def test_table_row_count_s3(capsys):
    code, out, _ = run(capsys, "table", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "u,v,rtilde"
    assert len(lines) == 1 + 19


def test_table_over_cap_exits_2(capsys):
    code, _, err = run(capsys, "table", "6")
    assert code == 2
    assert "--max-n 6" in err
