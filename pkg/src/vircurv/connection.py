"""Connection of the reductive homogeneous space diff(S^1) / span{f_0}.

``nabla_x y = 1/2 [x, y]_m + U(x, y)`` where ``U`` is the symmetric tensor
fixed by ``B(U(x, y), z) = 1/2 (B([x, z]_m, y) + B(x, [y, z]_m))``.  That is
the ``PAPER`` convention; ``NOMIZU`` uses ``[z, x]_m`` and ``[z, y]_m``, which
flips the sign of ``U``.
"""

from __future__ import annotations

import enum

from .errors import DomainError, ParameterError
from .exact import ExactScalar, rational
from .trig import (
    TrigField,
    ZERO_FIELD,
    apply_J,
    BasisLabel,
    basis,
    basis_f,
    basis_g,
    bracket,
    project_m,
    require_mean_zero,
)
from .virasoro import CentralParams, cocycle, inner_B


class SignConvention(str, enum.Enum):
    PAPER = "paper"
    NOMIZU = "nomizu"

    @classmethod
    def coerce(cls, value) -> "SignConvention":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown sign convention {value!r}; use 'paper' or 'nomizu'") from None


def _sign(convention) -> int:
    return 1 if SignConvention.coerce(convention) is SignConvention.PAPER else -1


def lambda_coeff(params: CentralParams, m: int, n: int) -> ExactScalar:
    """``lambda_{m,n} = (2n + m) theta_m / (2 theta_{m+n})`` for any integers with ``m + n != 0``."""
    if m + n == 0:
        raise DomainError(f"lambda_{{{m},{n}}} undefined: theta_0 = 0")
    den = params.theta(m + n)
    if den == 0:
        raise ParameterError(f"theta_{m + n} = 0 for these parameters")
    return (2 * n + m) * params.theta(m) / (2 * den)


def decompose(x: TrigField) -> list[tuple[BasisLabel, ExactScalar]]:
    """Coordinates of a mean-zero field in the ``f_k``, ``g_k`` basis."""
    out = []
    for k, (a, b) in x.items():
        if k == 0:
            raise DomainError("field has a constant component")
        if a:
            out.append((("f", k), a))
        if b:
            out.append((("g", k), b))
    return out


def _bilinear(op, x: TrigField, y: TrigField) -> TrigField:
    acc = ZERO_FIELD
    for la, ca in decompose(x):
        for lb, cb in decompose(y):
            term = op(la, lb)
            if term:
                acc = acc + (ca * cb) * term
    return acc


def u_tensor_oracle(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    """Solve the defining equation of U by testing against every basis field.

    Brackets of modes ``m`` and ``n`` only produce modes ``m + n`` and
    ``|m - n|``, so scanning up to ``max(x) + max(y)`` is complete.
    """
    require_mean_zero(x, y)
    sign = _sign(convention)
    top = x.max_mode + y.max_mode
    params.require_positive(top)
    Jy = apply_J(y)
    coeffs: dict[int, list] = {}
    for k in range(1, top + 1):
        weight = params.theta(k) / 2
        pair = []
        for z in (basis_f(k), basis_g(k)):
            # B(u, v) = omega(u, J v)
            rhs = (cocycle(params, project_m(bracket(x, z)), Jy)
                   + cocycle(params, x, apply_J(project_m(bracket(y, z))))) / 2
            pair.append(sign * rhs / weight)
        if pair[0] or pair[1]:
            coeffs[k] = pair
    return TrigField({k: tuple(v) for k, v in coeffs.items()})


def u_tensor_closed(params: CentralParams, a: BasisLabel, b: BasisLabel) -> TrigField:
    """Closed-form ``U`` on a pair of basis fields (``paper`` convention)."""
    (ka, m), (kb, n) = a, b
    if m < 1 or n < 1:
        raise DomainError("U is defined on f_k, g_k with k >= 1")
    if ka == "g" and kb == "f":
        return u_tensor_closed(params, b, a)
    lam = lambda p, q: lambda_coeff(params, p, q)  # noqa: E731
    if m == n:
        ln = lam(n, n)
        if ka == "f" and kb == "f":
            return ln * basis_g(2 * n)
        if ka == "f":
            return -ln * basis_f(2 * n)
        return -ln * basis_g(2 * n)
    half_sum = (lam(n, m) + lam(m, n)) / 2
    diff_coef = rational(n + m, 4)
    d = abs(n - m)
    if ka == "f" and kb == "f":
        return half_sum * basis_g(n + m) + diff_coef * basis_g(d)
    if ka == "f":
        low = -diff_coef if n > m else diff_coef
        return low * basis_f(d) - half_sum * basis_f(n + m)
    return diff_coef * basis_g(d) - half_sum * basis_g(n + m)


def u_tensor(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER, method: str = "closed") -> TrigField:
    """U on arbitrary mean-zero fields, by bilinear extension of the closed
    form (``method="closed"``) or by the linear-system oracle."""
    if method == "oracle":
        return u_tensor_oracle(params, x, y, convention)
    if method != "closed":
        raise DomainError(f"unknown U method {method!r}")
    require_mean_zero(x, y)
    params.require_positive(x.max_mode + y.max_mode)
    out = _bilinear(lambda la, lb: u_tensor_closed(params, la, lb), x, y)
    return out if _sign(convention) > 0 else -out


def nabla(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER, method: str = "closed") -> TrigField:
    require_mean_zero(x, y)
    return rational(1, 2) * project_m(bracket(x, y)) + u_tensor(params, x, y, convention, method)


def torsion_nabla(params: CentralParams, x: TrigField, y: TrigField, convention=SignConvention.PAPER) -> TrigField:
    return nabla(params, x, y, convention) - nabla(params, y, x, convention) - project_m(bracket(x, y))


def metric_defect(params: CentralParams, x: TrigField, y: TrigField, z: TrigField,
                  convention=SignConvention.PAPER, connection=None) -> ExactScalar:
    """``B(D_x y, z) + B(y, D_x z)`` for ``D = connection`` (default ``nabla``);
    zero iff ``D_x`` is B-skew."""
    if connection is None:
        connection = lambda p, u, v: nabla(p, u, v, convention)  # noqa: E731
    return inner_B(params, connection(params, x, y), z) + inner_B(params, y, connection(params, x, z))


