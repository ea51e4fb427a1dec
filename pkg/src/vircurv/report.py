"""Text, JSON and CSV rendering.

All scalars leave as ``p/q`` strings.  Output depends only on the report
contents, never on timing (elapsed time is opt-in).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .curvature import ComplexField, RicciReport
from .exact import ComplexScalar, format_complex, format_scalar
from .parser import format_field
from .trig import TrigField
from .verify import VerificationReport, show

SCHEMA_VERSION = 1
FORMATS = ("text", "json", "csv")


@dataclass
class Result:
    """One computed value plus the inputs that produced it."""

    operation: str
    params: dict
    inputs: dict
    value: object
    extra: dict = field(default_factory=dict)


def _scalar_json(v):
    if isinstance(v, TrigField):
        return {"text": format_field(v), "terms": [
            {"k": k, "a": a, "b": b} for k, a, b in v.to_triples()]}
    if isinstance(v, ComplexField):
        return {"text": show(v), "terms": [
            {"k": k, "re": format_scalar(c.re), "im": format_scalar(c.im)} for k, c in v.items()]}
    if isinstance(v, ComplexScalar):
        return format_complex(v)
    if isinstance(v, list):
        return [_scalar_json(x) for x in v]
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, int):
        return format_scalar(v)
    return show(v)


def _ricci_dict(r: RicciReport, params: dict | None) -> dict:
    out = {
        "n": r.n,
        "regularized": format_scalar(r.regularized),
        "closed_form": format_scalar(r.closed_form),
        "agrees": r.agrees,
        "partial": [
            {"M": M, "partial_sum": format_scalar(p), "boundary_term": format_scalar(b),
             "sum": format_scalar(p + b)}
            for M, p, b in r.partial
        ],
    }
    if params is not None:
        out["params"] = params
    out["schema_version"] = SCHEMA_VERSION
    return out


def _verify_dict(r: VerificationReport, timing: bool) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "suite": r.suite,
        "params": r.params.describe(),
        "max_mode": r.max_mode,
        "passed": r.passed,
        "checks": [
            {"name": c.name, "range": c.range, "status": c.status, "cases": c.cases,
             "counterexample": c.counterexample}
            for c in r.checks
        ],
        "observations": [{"name": k, "value": v} for k, v in r.observations],
    }
    if timing:
        out["elapsed_ms"] = round(r.elapsed_ms, 1)
    return out


def _result_dict(r: Result) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "operation": r.operation,
        "params": r.params,
        "inputs": r.inputs,
        "value": _scalar_json(r.value),
    }
    for k, v in r.extra.items():
        out[k] = _scalar_json(v)
    return out


def to_json(obj, timing: bool = False, params: dict | None = None) -> str:
    if isinstance(obj, VerificationReport):
        d = _verify_dict(obj, timing)
    elif isinstance(obj, RicciReport):
        d = _ricci_dict(obj, params)
    elif isinstance(obj, Result):
        d = _result_dict(obj)
    else:
        d = {"schema_version": SCHEMA_VERSION, "value": _scalar_json(obj)}
    return json.dumps(d, indent=2, ensure_ascii=False) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def to_csv(obj) -> str:
    if isinstance(obj, VerificationReport):
        rows = [("check", "range", "status", "cases", "inputs", "lhs", "rhs")]
        for c in obj.checks:
            cx = c.counterexample or {}
            rows.append((c.name, c.range, c.status, c.cases, "; ".join(cx.get("inputs", [])),
                         cx.get("lhs", ""), cx.get("rhs", "")))
        return _csv(rows)
    if isinstance(obj, RicciReport):
        rows = [("n", "M", "partial_sum", "boundary_term", "sum", "regularized", "closed_form")]
        reg, cf = format_scalar(obj.regularized), format_scalar(obj.closed_form)
        if not obj.partial:
            rows.append((obj.n, "", "", "", "", reg, cf))
        for M, p, b in obj.partial:
            rows.append((obj.n, M, format_scalar(p), format_scalar(b), format_scalar(p + b), reg, cf))
        return _csv(rows)
    value = obj.value if isinstance(obj, Result) else obj
    if isinstance(value, TrigField):
        return _csv([("k", "a_k", "b_k")] + value.to_triples())
    if isinstance(value, ComplexField):
        return _csv([("k", "re", "im")] + [(k, format_scalar(c.re), format_scalar(c.im)) for k, c in value.items()])
    if isinstance(value, list):
        return _csv([("M", "value")] + [(i + 1, show(v)) for i, v in enumerate(value)])
    rows = [("name", "value")]
    if isinstance(obj, Result):
        rows.append((obj.operation, show(value)))
        rows += [(k, show(v)) for k, v in obj.extra.items()]
    else:
        rows.append(("value", show(value)))
    return _csv(rows)


def _table(rows: list[tuple]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [str(x).ljust(w) for x, w in zip(r, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def to_text(obj, timing: bool = False) -> str:
    if isinstance(obj, VerificationReport):
        p = obj.params.describe()
        head = f"suite {obj.suite}  c={p['c']}  h={p['h']}  max_mode={obj.max_mode}\n"
        rows = [("status", "check", "range", "cases")]
        rows += [(c.status.upper(), c.name, c.range, c.cases) for c in obj.checks]
        out = head + _table(rows)
        for c in obj.failures:
            cx = c.counterexample
            out += (f"counterexample for {c.name}: inputs {', '.join(cx['inputs'])}\n"
                    f"  lhs = {cx['lhs']}\n  rhs = {cx['rhs']}\n")
        for k, v in obj.observations:
            out += f"note: {k} = {v}\n"
        n_fail = len(obj.failures)
        out += f"{len(obj.checks) - n_fail} passed, {n_fail} failed\n"
        if timing:
            out += f"elapsed {obj.elapsed_ms:.1f} ms\n"
        return out
    if isinstance(obj, RicciReport):
        out = (f"n = {obj.n}\nregularized = {format_scalar(obj.regularized)}\n"
               f"closed_form = {format_scalar(obj.closed_form)}\n")
        if obj.partial:
            rows = [("M", "partial_sum", "boundary_term", "sum")]
            rows += [(M, format_scalar(p), format_scalar(b), format_scalar(p + b)) for M, p, b in obj.partial]
            out += _table(rows)
        return out
    if isinstance(obj, Result):
        value = obj.value
        if isinstance(value, list):
            return _table([("M", "value")] + [(i + 1, show(v)) for i, v in enumerate(value)])
        out = show(value) + "\n"
        for k, v in obj.extra.items():
            out += f"{k} = {show(v)}\n"
        return out
    return show(obj) + "\n"


def emit(obj, fmt: str = "text", timing: bool = False, params: dict | None = None) -> str:
    """Render ``obj`` in ``fmt``; identical inputs give identical output."""
    if fmt == "json":
        return to_json(obj, timing, params)
    if fmt == "csv":
        return to_csv(obj)
    if fmt == "text":
        return to_text(obj, timing)
    raise ValueError(f"unknown format {fmt!r}")
