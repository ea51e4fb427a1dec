import json
import subprocess
import sys

import pytest

from vircurv.cli import build_parser, main, resolve_max_mode, resolve_params


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_bracket(capsys):
    code, out, _ = run(["bracket", "cos(t)", "cos(2t)"], capsys)
    assert code == 0
    assert out == "-3/2*sin(1t) - 1/2*sin(3t)\n"


def test_leading_minus_after_double_dash(capsys):
    code, out, _ = run(["bracket", "--", "-cos(t)", "cos(2t)"], capsys)
    assert (code, out) == (0, "3/2*sin(1t) + 1/2*sin(3t)\n")


@pytest.mark.parametrize("argv,expected", [
    (["nabla", "cos(t)", "cos(2t)"], "5/54*sin(3t)"),
    (["nabla-tilde", "cos(t)", "cos(2t)"], "-3/2*sin(1t) + 5/54*sin(3t)"),
    (["q-tensor", "cos(t)", "cos(2t)"], "3/2*sin(1t)"),
    (["u-tensor", "cos(t)", "cos(2t)", "--method", "oracle"], "3/4*sin(1t) + 37/108*sin(3t)"),
    (["nijenhuis", "cos(3t)", "cos(7t)"], "0"),
    (["torsion", "cos(4t)", "sin(9t)", "--connection", "tilde"], "0"),
    (["metric-defect", "cos(t)", "cos(2t)", "sin(3t)"], "5/4"),
    (["--convention", "nomizu", "metric-defect", "cos(t)", "cos(2t)", "sin(3t)"], "0"),
    (["cocycle", "cos(2t)", "sin(2t)"], "-4"),
    (["inner", "cos(2t)", "cos(2t)"], "4"),
    (["hs-sum", "--n", "1", "--max", "2"], "1267/864"),
    (["curvature", "--x", "-1", "--y", "2", "--z", "-2"], "(-268/27)*L_-1"),
])
def test_operations(capsys, argv, expected):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines()[0] == expected


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(["inner", "cos(2t)", "cos(2t)", "--c", "1", "--h", "1"], capsys)
    assert (code, out) == (0, "9/4\n")


def test_ricci_json(capsys):
    code, out, _ = run(["ricci", "--n", "1", "--cutoffs", "1,4", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["regularized"] == "-2" and data["schema_version"] == 1
    assert [row["sum"] for row in data["partial"]] == ["-2", "-2"]


def test_parse_error_exit_code(capsys):
    code, _, err = run(["inner", "tan(t)", "cos(t)"], capsys)
    assert code == 2
    assert "expected cos/sin/number at offset 0" in err


@pytest.mark.parametrize("argv", [
    ["verify", "brackets", "--max-mode", "0"],
    ["verify", "geodesics"],
    ["--preset", "fundamental", "inner", "cos(t)", "cos(t)"],
    ["--c", "1/0", "ricci", "--n", "1"],
    ["--c", "0.5", "ricci", "--n", "1"],
    ["inner", "cos(0t)", "cos(t)"],
    ["ricci", "--n", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_verify_pass_and_fail(capsys, monkeypatch):
    code, out, _ = run(["verify", "ricci", "--max-mode", "5"], capsys)
    assert code == 0 and "5 passed, 0 failed" in out

    import vircurv.verify as v

    def wrong(params, n):
        return v.ricci_closed_form(params, n) + (1 if n == 3 else 0)

    monkeypatch.setitem(v.DEFAULT_ORACLES, "ricci_closed_form", wrong)
    code, out, _ = run(["verify", "ricci", "--max-mode", "5"], capsys)
    assert code == 1
    assert "counterexample for regularized=closed_form: inputs 3" in out


def test_env_overrides():
    args = build_parser().parse_args(["ricci", "--n", "1"])
    env = {"VIRCURV_C": "1", "VIRCURV_H": "1", "VIRCURV_MAXMODE": "7"}
    p = resolve_params(args, env)
    assert (p.c, p.h) == (1, 1)
    assert resolve_max_mode(args, env) == 7
    args = build_parser().parse_args(["--c", "6", "--max-mode", "3", "ricci", "--n", "1"])
    p = resolve_params(args, env)
    assert (p.c, p.h) == (6, 1)
    assert resolve_max_mode(args, env) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vircurv", "ricci", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "regularized = -17/8" in proc.stdout
