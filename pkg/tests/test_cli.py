import copy
import json

from towercoh.verify_cli import main, run_scenario


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_run_small_scenario(capsys):
    code, out, _ = run_cli(capsys, "run", "appendixD-ext1")
    assert code == 0
    assert "2 passed, 0 failed" in out


def test_run_unknown_scenario(capsys):
    code, _, err = run_cli(capsys, "run", "nonexistent")
    assert code == 2
    assert "unknown scenario" in err


def test_run_json_schema(capsys):
    code, out, _ = run_cli(capsys, "run", "quiver-X-n3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["scenario"] == "quiver-X-n3"
    for r in payload["assertions"]:
        assert set(r) >= {"id", "anchor", "status", "expected", "got", "ms"}
        assert r["status"] == "pass"


def test_query_basic(capsys):
    code, out, _ = run_cli(capsys, "query", "--space", "point(V=5);G(2,V)",
                           "--expr", "dual(S1)")
    assert code == 0
    assert "H^0=V*" in out


def test_query_point_ambient(capsys):
    code, out, _ = run_cli(capsys, "query", "--space", "point(V=4)",
                           "--expr", "V", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["table"] == {"0": [[[1, 0, 0, 0], 1]]}
    assert payload["total_dim"] == 4


def test_query_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "query", "--space", "point(V=5);G(2,V)",
                           "--expr", "dual(S1")
    assert code == 2 and "parse error" in err
    code, _, err = run_cli(capsys, "query", "--space", "point(V=", "--expr", "V")
    assert code == 2


def test_query_resource_limit_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("VERIFY_MAX_DIM", "4")
    code, _, err = run_cli(capsys, "query", "--space", "point(V=3); P(V)",
                           "--expr", "S^2(S^2(S^2 V))")
    assert code == 3 and "resource limit" in err


def test_query_ext_and_euler(capsys):
    code, out, _ = run_cli(capsys, "query",
                           "--space", "point(V=4);G(2,V);P(S^2 S1)",
                           "--expr", "dual(S1)", "--ext", "O(H2)", "--euler",
                           "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["query"].startswith("Ext^*")
    assert payload["euler"]["dim"] == 4


def test_query_twist_applies_to_ext_target(capsys):
    # Ext^*(O, O (x) O(-H2)) = H^*(O(-H2)) = 0; a two-sided twist would
    # cancel and wrongly report the trivial module
    code, out, _ = run_cli(capsys, "query",
                           "--space", "point(V=4);G(2,V);P(S^2 S1)",
                           "--expr", "O(0)", "--ext", "O(0)",
                           "--twist", "O(-H2)", "--json")
    assert code == 0
    assert json.loads(out)["table"] == {}


def test_query_twist(capsys):
    code, out, _ = run_cli(capsys, "query",
                           "--space", "point(V=4);G(3,wedge^2 V)",
                           "--expr", "schur([1,1],Q1)*Q1",
                           "--twist", "det(V,-1)", "--json")
    assert code == 0
    payload = json.loads(out)
    weights = [tuple(w) for w, _ in payload["table"]["0"]]
    assert (1, 1, 1, -1) in weights and (2, 1, 0, -1) in weights


def test_check_collection_file(tmp_path, capsys):
    good = tmp_path / "coll.txt"
    good.write_text("""point(V=3); G(2,V); P(S^2 S1)
mode: plain
O(-3H2)
O(-2H2-H1)
S1*O(-2H2)
O(-2H2)
O(-H2-H1)
S1*O(-H2)
O(-H2)
O(-H1)
S1
""")
    code, out, _ = run_cli(capsys, "check", "--collection", str(good))
    assert code == 0 and "collection OK" in out

    bad = tmp_path / "bad.txt"
    bad.write_text("point(V=3); G(2,V); P(S^2 S1)\nmode: plain\nO(H2)\nO(0)\n")
    code, out, _ = run_cli(capsys, "check", "--collection", str(bad))
    assert code == 1 and "collection FAILED" in out


def test_check_dual_lefschetz_blocks(tmp_path, capsys):
    f = tmp_path / "dl.txt"
    f.write_text("""point(V=4); G(2,V); P(S^2 S1)
mode: dual-lefschetz; twists: -3..0
O(-H2)
O(-H1)
S1

O(-H2)
O(-H1)
S1

O(-H2)
O(-H1)
S1
T_rel(2)*O(-H2+H1)

O(-H2)
O(-H1)
S1
T_rel(2)*O(-H2+H1)
""")
    code, out, _ = run_cli(capsys, "check", "--collection", str(f), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and len(payload["objects"]) == 14


def test_reports_deterministic_across_jobs():
    r1 = run_scenario("quiver-X-n4", jobs=1)
    r4 = run_scenario("quiver-X-n4", jobs=4)
    n1, n4 = copy.deepcopy(r1), copy.deepcopy(r4)
    for rep in (n1, n4):
        for a in rep["assertions"]:
            a["ms"] = 0
    assert json.dumps(n1, sort_keys=True) == json.dumps(n4, sort_keys=True)


def test_no_command_prints_usage(capsys):
    code, _, err = run_cli(capsys)
    assert code == 2


def test_failing_assertion_exits_1(capsys, monkeypatch):
    from towercoh import scenarios

    def bad_build():
        return [scenarios.Assertion("always-wrong", "synthetic", "DERIVED",
                                    lambda: (False, "1", "2"))]

    monkeypatch.setitem(scenarios.REGISTRY, "synthetic-failure",
                        scenarios.Scenario("synthetic-failure", "test", bad_build))
    code, out, _ = run_cli(capsys, "run", "synthetic-failure")
    assert code == 1
    assert "expected: 1" in out and "got:      2" in out
