"""Almost-complex structure on diff_0(S^1) and the modified connection.

``Q`` is built from ``nabla J`` and the modified connection is
``nabla_tilde_x y = nabla_x y - Q(x, y)``.
"""

from __future__ import annotations

from .connection import SignConvention, lambda_coeff, metric_defect, nabla
from .errors import DomainError
from .exact import ExactScalar, ZERO, rational
from .trig import TrigField, apply_J, bracket, project_m, require_mean_zero
from .virasoro import CentralParams


def nijenhuis(x: TrigField, y: TrigField) -> TrigField:
    """``2([Jx, Jy]_m - [x, y]_m - J[x, Jy]_m - J[Jx, y]_m)``."""
    require_mean_zero(x, y)
    jx, jy = apply_J(x), apply_J(y)
    out = (
        project_m(bracket(jx, jy))
        - project_m(bracket(x, y))
        - apply_J(project_m(bracket(x, jy)))
        - apply_J(project_m(bracket(jx, y)))
    )
    return 2 * out


def nabla_J(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    """``(nabla_x J) y = nabla_x (J y) - J (nabla_x y)``."""
    return nabla(params, x, apply_J(y), convention) - apply_J(nabla(params, x, y, convention))


def q_tensor(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    """``Q`` from ``4Q(x, y) = (nabla_{Jy} J) x + J((nabla_y J) x) + 2 J((nabla_x J) y)``."""
    four_q = (
        nabla_J(params, apply_J(y), x, convention)
        + apply_J(nabla_J(params, y, x, convention))
        + 2 * apply_J(nabla_J(params, x, y, convention))
    )
    return rational(1, 4) * four_q


def nabla_tilde(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    return nabla(params, x, y, convention) - q_tensor(params, x, y, convention)


def torsion_tilde(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    return (
        nabla_tilde(params, x, y, convention)
        - nabla_tilde(params, y, x, convention)
        - project_m(bracket(x, y))
    )


def metric_defect_tilde(params: CentralParams, x: TrigField, y: TrigField, z: TrigField,
                        convention=SignConvention.PAPER) -> ExactScalar:
    """``B(nabla_tilde_x y, z) + B(y, nabla_tilde_x z)``; reported, not asserted zero."""
    conn = lambda p, u, v: nabla_tilde(p, u, v, convention)  # noqa: E731
    return metric_defect(params, x, y, z, convention, connection=conn)


def hs_term(params: CentralParams, n: int, m: int) -> ExactScalar:
    """The ``m``-th summand of the Hilbert-Schmidt series for ``nabla_tilde . f_n``."""
    th = params.theta
    lam = lambda_coeff(params, m, n)
    term = lam * lam * th(n + m) / (th(n) * th(m))
    if m < n:
        term += (m + n) ** 2 * th(n - m) / (4 * th(n) * th(m))
    return term


def hs_partial_sum(params: CentralParams, n: int, M: int) -> ExactScalar:
    """Partial sum through ``m = M`` of the divergent Hilbert-Schmidt series."""
    if n < 1 or M < 1:
        raise DomainError("hs_partial_sum needs n >= 1 and M >= 1")
    params.require_positive(M + n)
    total = ZERO
    for m in range(1, M + 1):
        total += hs_term(params, n, m)
    return total


def hs_partial_sums(params: CentralParams, n: int, M: int) -> list[ExactScalar]:
    """``[S_1, ..., S_M]`` in one pass."""
    if n < 1 or M < 1:
        raise DomainError("hs_partial_sums needs n >= 1 and M >= 1")
    params.require_positive(M + n)
    out = []
    total = ZERO
    for m in range(1, M + 1):
        total += hs_term(params, n, m)
        out.append(total)
    return out
