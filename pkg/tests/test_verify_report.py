import json

import pytest

from vircurv.curvature import ricci_report
from vircurv.errors import DomainError, ParameterError
from vircurv.exact import rational
from vircurv.report import Result, emit
from vircurv.tables import nabla_table
from vircurv.trig import TrigField, basis_g
from vircurv.verify import SUITES, run_verify
from vircurv.virasoro import PRESETS, CentralParams


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_small(suite):
    rep = run_verify(suite, CentralParams(1, 1), 4)
    assert rep.passed, [(c.name, c.counterexample) for c in rep.failures]


def test_ricci_suite_names(cubic):
    rep = run_verify("ricci", cubic, 20)
    assert rep.passed
    names = {c.name: c for c in rep.checks}
    assert names["regularized=closed_form"].range == "n=1..20"
    assert names["regularized=closed_form"].cases == 20


def test_bad_arguments(cubic):
    with pytest.raises(DomainError):
        run_verify("brackets", cubic, 0)
    with pytest.raises(DomainError):
        run_verify("geodesics", cubic, 3)
    with pytest.raises(ParameterError):
        run_verify("connection", PRESETS["fundamental"], 3)


def _mutated_nabla(params, a, b):
    out = nabla_table(params, a, b)
    if a == ("f", 2) and b == ("f", 1):
        out = out + basis_g(1)
    return out


def test_forced_failure_has_counterexample(cubic):
    rep = run_verify("connection", cubic, 3, oracles={"nabla": _mutated_nabla})
    assert not rep.passed
    (bad,) = rep.failures
    assert bad.name == "nabla=table"
    cx = bad.counterexample
    assert cx["inputs"] == ["f_2", "f_1"]
    assert cx["lhs"] == "3/2*sin(1t) + 16/27*sin(3t)"
    assert cx["rhs"] == "5/2*sin(1t) + 16/27*sin(3t)"


def test_json_ricci(cubic):
    data = json.loads(emit(ricci_report(cubic, 1, [1]), "json"))
    assert data["schema_version"] == 1
    assert (data["n"], data["regularized"], data["closed_form"]) == (1, "-2", "-2")
    assert data["partial"][0] == {"M": 1, "partial_sum": "-25/8", "boundary_term": "9/8", "sum": "-2"}


def test_text_zero_field():
    assert emit(TrigField(), "text") == "0\n"


def test_deterministic(cubic):
    a = run_verify("complex", cubic, 3)
    b = run_verify("complex", cubic, 3)
    for fmt in ("text", "json", "csv"):
        assert emit(a, fmt) == emit(b, fmt)
    assert "elapsed" not in emit(a, "json")
    assert "elapsed_ms" in emit(a, "json", timing=True)


def test_csv_shapes(cubic):
    rep = run_verify("ricci", cubic, 2)
    lines = emit(rep, "csv").splitlines()
    assert lines[0] == "check,range,status,cases,inputs,lhs,rhs"
    assert len(lines) == len(rep.checks) + 1
    res = Result("nabla", cubic.describe(), {}, rational(3, 2) * basis_g(1))
    assert emit(res, "csv") == "k,a_k,b_k\n1,0,3/2\n"
    assert json.loads(emit(res, "json"))["value"]["terms"] == [{"k": 1, "a": "0", "b": "3/2"}]
