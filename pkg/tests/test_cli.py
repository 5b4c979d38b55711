import json

from carterlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_run_single_case(capsys):
    code, out, _ = run_cli(capsys, "check", "run", "norm2syl-psl2-7")
    assert code == 0 and "PASS" in out


def test_check_run_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "check", "run", "psl23-power",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["id"] == "psl23-power"
    assert payload[0]["status"] == "pass"
    assert set(payload[0]) >= {"id", "status", "anchor", "metrics", "details"}


def test_check_list(capsys):
    code, out, _ = run_cli(capsys, "check", "list", "--tier", "quick")
    assert code == 0 and "norm2syl-psl2-7" in out
    code, out, _ = run_cli(capsys, "check", "list", "--tier", "full")
    assert "pgammal-2-27-witness" in out


def test_unknown_case_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "check", "run", "nope")
    assert code == 2


def test_unknown_tier_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "check", "run", "all", "--tier", "weekly")
    assert code == 2


def test_carter_command(capsys):
    code, out, _ = run_cli(capsys, "carter", "Alt(5)")
    assert code == 0 and "0 Carter class(es)" in out
    code, out, _ = run_cli(capsys, "carter", "Sym(4)", "--format", "json")
    payload = json.loads(out)
    assert payload["classes"] == 1 and payload["representative_orders"] == [8]


def test_carter_cap_exit_code(capsys):
    code, _, err = run_cli(capsys, "carter", "Sp(4,3)", "--cap", "100")
    assert code == 3 and "cap" in err


def test_malformed_spec_exit_code(capsys):
    code, _, err = run_cli(capsys, "carter", "Borel(3)")
    assert code == 2 and "Borel" in err


def test_roots_omega(capsys):
    code, out, _ = run_cli(capsys, "roots", "omega", "C4")
    assert code == 0
    assert "4 involution-fixed" in out
    code, out, _ = run_cli(capsys, "roots", "omega", "E6", "--format", "json")
    assert json.loads(out)["omega_fixed_roots"] == []


def test_roots_subsystems(capsys):
    code, out, _ = run_cli(capsys, "roots", "subsystems", "G2")
    assert code == 0 and "A2" in out
    code, out, _ = run_cli(capsys, "roots", "subsystems", "C2", "--format", "json")
    payload = json.loads(out)
    assert any(s["label"] == "A1+A1" for s in payload["subsystems"])


def test_torus_command(capsys):
    code, out, _ = run_cli(capsys, "torus", "A1", "--q", "7")
    assert code == 0 and "|T| =" in out
    code, out, _ = run_cli(capsys, "torus", "A2", "--twist", "flip", "--q", "3",
                           "--format", "json")
    payload = json.loads(out)
    assert {c["order"] for c in payload["classes"]} >= {16, 8, 7}


def test_group_info(capsys):
    code, out, _ = run_cli(capsys, "group", "info", "PSL(2,7)")
    assert code == 0 and "order 168" in out


def test_env_var_sets_default_parallelism(capsys, monkeypatch):
    monkeypatch.setenv("CARTERLAB_THREADS", "3")
    from carterlab.cli import _default_parallelism
    assert _default_parallelism() == 3
    monkeypatch.setenv("CARTERLAB_THREADS", "bogus")
    assert _default_parallelism() == 1
    code, out, _ = run_cli(capsys, "check", "run", "psl23-power")
    assert code == 0 and "PASS" in out


def test_seed_flag_accepted_and_results_seed_independent(capsys):
    _, out1, _ = run_cli(capsys, "--seed", "1", "carter", "Sym(4)",
                         "--format", "json")
    _, out2, _ = run_cli(capsys, "--seed", "99", "carter", "Sym(4)",
                         "--format", "json")
    a, b = json.loads(out1), json.loads(out2)
    assert a["classes"] == b["classes"] == 1
    assert a["representative_orders"] == b["representative_orders"]
    from carterlab.permgrp.sylow import set_default_seed
    set_default_seed(0)


def test_identical_invocations_identical_output(capsys):
    _, out1, _ = run_cli(capsys, "torus", "C2", "--q", "5", "--format", "json")
    _, out2, _ = run_cli(capsys, "torus", "C2", "--q", "5", "--format", "json")
    assert out1 == out2
    _, info1, _ = run_cli(capsys, "group", "info", "Sp(4,3)", "--format", "json")
    _, info2, _ = run_cli(capsys, "group", "info", "Sp(4,3)", "--format", "json")
    assert info1 == info2
