"""Identity sweeps grouped into suites.

Each check walks a finite index range and stops at the first mismatch,
which is kept as a counterexample (inputs plus both sides, exact).  Oracles
come from :mod:`vircurv.tables` unless overridden, which is how the test
harness forces a failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product as cartesian

from . import tables as _tables
from .complex_geometry import (
    hs_partial_sums,
    metric_defect_tilde,
    nabla_J,
    nabla_tilde,
    nijenhuis,
    q_tensor,
    torsion_tilde,
)
from .connection import (
    SignConvention,
    lambda_coeff,
    metric_defect,
    nabla,
    torsion_nabla,
    u_tensor,
    u_tensor_closed,
    u_tensor_oracle,
)
from .curvature import (
    ComplexField,
    complex_bracket,
    curvature,
    from_complex,
    nabla_tilde_complex,
    nabla_tilde_complexified,
    ricci_closed_form,
    ricci_coefficient,
    ricci_coefficient_from_curvature,
    ricci_partial,
    ricci_polynomial_sum,
    ricci_regularized,
    to_complex,
)
from .errors import DomainError
from .exact import ComplexScalar, format_scalar, rational
from .parser import format_field
from .trig import (
    TrigField,
    apply_J,
    basis,
    basis_labels,
    bracket,
    label_str,
    project_m,
)
from .virasoro import (
    KAPPA,
    CentralParams,
    check_jacobi,
    cocycle,
    element,
    inner_B,
    inner_B_diagonal,
)

SUITES = ("brackets", "cocycle", "connection", "complex", "curvature", "ricci")

DEFAULT_ORACLES = {
    "bracket": _tables.bracket_table,
    "inner_B": _tables.inner_B_table,
    "nabla": _tables.nabla_table,
    "nabla_J": _tables.nabla_J_table,
    "q_tensor": _tables.q_table,
    "nabla_tilde": _tables.nabla_tilde_table,
    "complex_bracket": _tables.complex_bracket_table,
    "ricci_closed_form": ricci_closed_form,
}

RANDOM_SEED = 20240611


@dataclass
class Check:
    name: str
    range: str
    passed: bool
    cases: int
    counterexample: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    suite: str
    params: CentralParams
    max_mode: int
    checks: list = field(default_factory=list)
    observations: list = field(default_factory=list)  # (name, text value)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def show(v) -> str:
    """Exact text for anything a check can produce."""
    if isinstance(v, TrigField):
        return format_field(v)
    if isinstance(v, ComplexField):
        from .curvature import format_complex_field

        return format_complex_field(v)
    if isinstance(v, ComplexScalar):
        return str(v)
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], str):
        return label_str(v)
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(show(x) for x in v) + ")"
    if isinstance(v, bool) or v is None:
        return str(v)
    if isinstance(v, int):
        return str(v)
    try:
        return format_scalar(v)
    except TypeError:
        return str(v)


def compare(name: str, rng: str, cases, lhs, rhs) -> Check:
    """Evaluate ``lhs(*case) == rhs(*case)`` over ``cases``; keep the first miss."""
    n = 0
    for case in cases:
        n += 1
        left, right = lhs(*case), rhs(*case)
        if left != right:
            cx = {
                "inputs": [show(c) for c in case],
                "lhs": show(left),
                "rhs": show(right),
            }
            return Check(name, rng, False, n, cx)
    return Check(name, rng, True, n)


def _zero(name, rng, cases, fn) -> Check:
    return compare(name, rng, cases, fn, lambda *_: 0)


def random_field(rnd: random.Random, max_mode: int, terms: int = 3, mean_zero: bool = True) -> TrigField:
    """Sparse field with small rational coefficients."""
    lo = 1 if mean_zero else 0
    coeffs = {}
    for _ in range(rnd.randint(1, terms)):
        k = rnd.randint(lo, max_mode)
        a = rational(rnd.randint(-9, 9), rnd.randint(1, 6))
        b = rational(rnd.randint(-9, 9), rnd.randint(1, 6)) if k else 0
        coeffs[k] = (a, b)
    return TrigField(coeffs)


def _pairs(labels):
    return list(cartesian(labels, labels))


def _bilinear_table(table, params, x: TrigField, y: TrigField) -> TrigField:
    acc = TrigField()
    for ka, (a1, b1) in x.items():
        for kb, (a2, b2) in y.items():
            for la, ca in ((("f", ka), a1), (("g", ka), b1)):
                for lb, cb in ((("f", kb), a2), (("g", kb), b2)):
                    if ca and cb:
                        acc = acc + (ca * cb) * table(params, la, lb)
    return acc


# --- suites -----------------------------------------------------------------

def suite_brackets(params, max_mode, oracles, rep):
    labels0 = basis_labels(max_mode, start=0)
    table = oracles["bracket"]
    rng = f"basis modes 0..{max_mode}"
    rep.checks.append(compare("bracket=table", rng, _pairs(labels0),
                              lambda a, b: bracket(basis(a), basis(b)), table))
    rep.checks.append(_zero("bracket antisymmetry", rng, _pairs(labels0),
                            lambda a, b: bracket(basis(a), basis(b)) + bracket(basis(b), basis(a))))
    jm = min(max_mode, 12)
    trip = list(cartesian(basis_labels(jm, start=0), repeat=3))
    rep.checks.append(_zero("bracket jacobi", f"basis modes 0..{jm}", trip, lambda a, b, c: (
        bracket(basis(a), bracket(basis(b), basis(c)))
        + bracket(basis(b), bracket(basis(c), basis(a)))
        + bracket(basis(c), bracket(basis(a), basis(b))))))
    rep.checks.append(_zero("[h,m] in m", rng, [(lb,) for lb in basis_labels(max_mode)],
                            lambda a: bracket(basis(("f", 0)), basis(a)).a(0)))
    idx = [k for k in range(-max_mode, max_mode + 1) if k]
    ctable = oracles["complex_bracket"]

    def ctab(a, b):
        r = ctable(a, b)
        return ComplexField() if r is None else ComplexField({r[0]: ComplexScalar(0, r[1])})

    rep.checks.append(compare("complex bracket=table", f"|index| 1..{max_mode}", list(cartesian(idx, idx)),
                              lambda a, b: complex_bracket(ComplexField.basis(a), ComplexField.basis(b)), ctab))
    rep.checks.append(compare("complex bracket realifies", f"|index| 1..{max_mode}", list(cartesian(idx, idx)),
                              lambda a, b: complex_bracket(ComplexField.basis(a), ComplexField.basis(b)),
                              lambda a, b: _realified_bracket(a, b)))


def _realified_bracket(a: int, b: int) -> ComplexField:
    x1, y1 = from_complex(ComplexField.basis(a))
    x2, y2 = from_complex(ComplexField.basis(b))
    re = bracket(x1, x2) - bracket(y1, y2)
    im = bracket(x1, y2) + bracket(y1, x2)
    h = ComplexField({0: ComplexScalar(re.a(0), im.a(0))})
    return to_complex(project_m(re), project_m(im)) + h


def suite_cocycle(params, max_mode, oracles, rep):
    jm = min(max_mode, 10)
    elems = {label_str(lb): element(basis(lb)) for lb in basis_labels(jm)}
    elems["kappa"] = KAPPA

    def jacobi(a, b, c):
        d = check_jacobi(params, elems[a], elems[b], elems[c])
        return (d.central, d.field)

    rep.checks.append(compare("virasoro jacobi", f"f_1..f_{jm}, g_1..g_{jm}, kappa",
                              list(cartesian(elems, repeat=3)), jacobi, lambda *_: (0, TrigField())))
    labels = basis_labels(max_mode)
    rng = f"basis modes 1..{max_mode}"
    rep.checks.append(_zero("cocycle antisymmetry", rng, _pairs(labels),
                            lambda a, b: cocycle(params, basis(a), basis(b)) + cocycle(params, basis(b), basis(a))))
    params.require_positive(max_mode)
    rep.checks.append(compare("B=table", rng, _pairs(labels),
                              lambda a, b: inner_B(params, basis(a), basis(b)),
                              lambda a, b: oracles["inner_B"](params, a, b)))
    rnd = random.Random(RANDOM_SEED)
    fields = [(random_field(rnd, max_mode), random_field(rnd, max_mode)) for _ in range(200)]
    rr = f"200 random fields, modes <= {max_mode}"
    rep.checks.append(compare("B symmetric", rr, fields,
                              lambda x, y: inner_B(params, x, y), lambda x, y: inner_B(params, y, x)))
    rep.checks.append(compare("B diagonal formula", rr, fields,
                              lambda x, y: inner_B(params, x, y), lambda x, y: inner_B_diagonal(params, x, y)))
    rep.checks.append(compare("B J-invariant", rr, fields,
                              lambda x, y: inner_B(params, apply_J(x), apply_J(y)),
                              lambda x, y: inner_B(params, x, y)))


def suite_connection(params, max_mode, oracles, rep):
    labels = basis_labels(max_mode)
    params.require_positive(2 * max_mode)
    rng = f"basis modes 1..{max_mode}"
    pairs = _pairs(labels)
    rep.checks.append(compare("U closed=oracle", rng, pairs,
                              lambda a, b: u_tensor_closed(params, a, b),
                              lambda a, b: u_tensor_oracle(params, basis(a), basis(b))))
    rep.checks.append(compare("nabla=table", rng, pairs,
                              lambda a, b: nabla(params, basis(a), basis(b)),
                              lambda a, b: oracles["nabla"](params, a, b)))
    for conv in SignConvention:
        rep.checks.append(_zero(f"torsion_nabla=0 ({conv.value})", rng, pairs,
                                lambda a, b, conv=conv: torsion_nabla(params, basis(a), basis(b), conv)))
    rnd = random.Random(RANDOM_SEED + 1)
    fields = [(random_field(rnd, max_mode), random_field(rnd, max_mode)) for _ in range(200)]
    for conv in SignConvention:
        rep.checks.append(compare(f"U symmetric ({conv.value})", f"200 random pairs, modes <= {max_mode}", fields,
                                  lambda x, y, conv=conv: u_tensor(params, x, y, conv),
                                  lambda x, y, conv=conv: u_tensor(params, y, x, conv)))
    tm = min(max_mode, 20)
    tl = [basis(lb) for lb in basis_labels(tm)]
    names = basis_labels(tm)
    trip = list(cartesian(range(len(tl)), repeat=3))
    rep.checks.append(_zero("metric_defect=0 (nomizu)", f"basis triples, modes 1..{tm}",
                            [(names[i], names[j], names[k]) for i, j, k in trip],
                            lambda a, b, c: metric_defect(params, basis(a), basis(b), basis(c), SignConvention.NOMIZU)))
    lm = min(max_mode, 50)
    lpairs = [(m, n) for m in range(-lm, lm + 1) for n in range(-lm, lm + 1) if m + n]
    rep.checks.append(compare("lambda_{m,n}=lambda_{n,m}+(m-n)/2", f"-{lm}..{lm}", lpairs,
                              lambda m, n: lambda_coeff(params, m, n),
                              lambda m, n: lambda_coeff(params, n, m) + rational(m - n, 2)))
    # the ``paper``-convention defect is reported, not asserted
    nonzero = 0
    first = None
    for i, j, k in trip:
        d = metric_defect(params, tl[i], tl[j], tl[k], SignConvention.PAPER)
        if d:
            nonzero += 1
            if first is None:
                first = (names[i], names[j], names[k], d)
    rep.observations.append((f"metric_defect (paper) nonzero triples, modes 1..{tm}", str(nonzero)))
    if first is not None:
        rep.observations.append(("metric_defect (paper) first nonzero",
                                 f"{label_str(first[0])},{label_str(first[1])},{label_str(first[2])} -> {show(first[3])}"))
    if max_mode >= 3:
        w = metric_defect(params, basis(("f", 1)), basis(("f", 2)), basis(("g", 3)), SignConvention.PAPER)
        rep.observations.append(("metric_defect(f_1,f_2,g_3) paper", show(w)))


def suite_complex(params, max_mode, oracles, rep):
    labels = basis_labels(max_mode)
    params.require_positive(2 * max_mode)
    rng = f"basis modes 1..{max_mode}"
    pairs = _pairs(labels)
    rep.checks.append(_zero("nijenhuis=0", rng, pairs, lambda a, b: nijenhuis(basis(a), basis(b))))
    rep.checks.append(compare("N(Jx,y)=-J N(x,y)", rng, pairs,
                              lambda a, b: nijenhuis(apply_J(basis(a)), basis(b)),
                              lambda a, b: -apply_J(nijenhuis(basis(a), basis(b)))))
    ops = {"nabla_J": nabla_J, "q_tensor": q_tensor, "nabla_tilde": nabla_tilde}
    for name, op in ops.items():
        rep.checks.append(compare(f"{name}=table", rng, pairs,
                                  lambda a, b, op=op: op(params, basis(a), basis(b)),
                                  lambda a, b, name=name: oracles[name](params, a, b)))
    rep.checks.append(_zero("torsion_tilde=0", rng, pairs,
                            lambda a, b: torsion_tilde(params, basis(a), basis(b))))
    rnd = random.Random(RANDOM_SEED + 2)
    rm = max(1, max_mode // 2)
    fields = [(random_field(rnd, rm), random_field(rnd, rm)) for _ in range(200)]
    rep.checks.append(compare("nabla_tilde=nabla-Q", f"200 random pairs, modes <= {rm}", fields,
                              lambda x, y: nabla(params, x, y) - q_tensor(params, x, y),
                              lambda x, y: _bilinear_table(oracles["nabla_tilde"], params, x, y)))
    hs_n, hs_M = 1, 8 * max_mode
    sums = hs_partial_sums(params, hs_n, hs_M)
    rep.checks.append(compare("hs partial sums increasing", f"n={hs_n}, M=1..{hs_M}",
                              [(M,) for M in range(1, hs_M)],
                              lambda M: sums[M] > sums[M - 1], lambda M: True))
    # the exact value is hundreds of digits long; a float is enough here
    rep.observations.append((f"hs_partial_sum n={hs_n} M={hs_M} (approx)", f"{float(sums[-1]):.6g}"))
    if max_mode >= 3:
        w = metric_defect_tilde(params, basis(("f", 1)), basis(("f", 2)), basis(("g", 3)))
        rep.observations.append(("metric_defect_tilde(f_1,f_2,g_3) paper", show(w)))


def suite_curvature(params, max_mode, oracles, rep):
    params.require_positive(4 * max_mode)
    idx = [k for k in range(-max_mode, max_mode + 1) if k]
    B = ComplexField.basis
    rng = f"|index| 1..{max_mode}"
    rep.checks.append(compare("nabla_tilde_complex=complexified", rng, list(cartesian(idx, idx)),
                              lambda a, b: nabla_tilde_complex(params, B(a), B(b)),
                              lambda a, b: nabla_tilde_complexified(params, B(a), B(b))))
    gm = min(max_mode, 12)
    gidx = [k for k in range(-gm, gm + 1) if k]
    rep.checks.append(compare("curvature grading", f"|index| 1..{gm}", list(cartesian(gidx, repeat=3)),
                              lambda g, a, b: all(k == g + a + b for k in curvature(params, B(g), B(a), B(b)).indices),
                              lambda *_: True))
    mn = [(m, n) for m in range(1, max_mode + 1) for n in range(1, max_mode + 1)]
    rep.checks.append(compare("ricci coefficient: curvature=cases", f"m,n=1..{max_mode}", mn,
                              lambda m, n: ricci_coefficient_from_curvature(params, m, n),
                              lambda m, n: ricci_coefficient(params, m, n)))
    rep.checks.append(_zero("R(L_m,L_n)L_-n=0", f"m,n=1..{max_mode}, m!=n", [p for p in mn if p[0] != p[1]],
                            lambda m, n: curvature(params, B(m), B(n), B(-n))))


def suite_ricci(params, max_mode, oracles, rep):
    params.require_positive(4 * max_mode)
    ns = [(n,) for n in range(1, max_mode + 1)]
    rng = f"n=1..{max_mode}"
    closed = oracles["ricci_closed_form"]
    rep.checks.append(compare("regularized=closed_form", rng, ns,
                              lambda n: ricci_regularized(params, n), lambda n: closed(params, n)))
    rep.checks.append(compare("regularized=polynomial sum", rng, ns,
                              lambda n: ricci_regularized(params, n), lambda n: ricci_polynomial_sum(params, n)))
    pm = 4 * max_mode
    rep.checks.append(compare("sum (m+n)(2n-m) = (13n^3-n)/6", f"n=1..{pm}", [(n,) for n in range(1, pm + 1)],
                              lambda n: rational(sum((m + n) * (2 * n - m) for m in range(1, n + 1))),
                              lambda n: rational(13 * n ** 3 - n, 6)))
    tn = min(max_mode, 10)
    tM = 3 * max_mode
    cases = [(n, M) for n in range(1, tn + 1) for M in range(n, tM + 1)]
    rep.checks.append(compare("partial+boundary=regularized", f"n=1..{tn}, M=n..{tM}", cases,
                              lambda n, M: sum(ricci_partial(params, n, M)),
                              lambda n, M: ricci_regularized(params, n)))
    rep.checks.append(compare("boundary>0", f"n=1..{tn}, M=n..{tM}", cases,
                              lambda n, M: ricci_partial(params, n, M)[1] > 0, lambda n, M: True))


_RUNNERS = {
    "brackets": suite_brackets,
    "cocycle": suite_cocycle,
    "connection": suite_connection,
    "complex": suite_complex,
    "curvature": suite_curvature,
    "ricci": suite_ricci,
}


def run_verify(suite: str, params: CentralParams, max_mode: int, oracles: dict | None = None) -> VerificationReport:
    """Run one suite (or ``"all"``) up to ``max_mode``.

    Raises :class:`DomainError` for an unknown suite or ``max_mode < 1`` and
    :class:`ParameterError` when theta is not positive on the needed range.
    """
    if suite != "all" and suite not in _RUNNERS:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    if not isinstance(max_mode, int) or max_mode < 1:
        raise DomainError(f"max_mode must be a positive integer, got {max_mode!r}")
    merged = dict(DEFAULT_ORACLES)
    merged.update(oracles or {})
    rep = VerificationReport(suite, params, max_mode)
    t0 = time.perf_counter()
    for name in (SUITES if suite == "all" else (suite,)):
        _RUNNERS[name](params, max_mode, merged, rep)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep
