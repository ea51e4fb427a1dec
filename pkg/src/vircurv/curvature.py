"""Complexified L-basis calculus, the curvature of the modified connection,
and the regularized Ricci trace.

``L_k = f_k + i g_k`` and ``L_{-k} = f_k - i g_k`` for ``k >= 1``; as
functions ``L_k = exp(ikt)`` for every signed ``k``, so ``L_0 = f_0`` spans
the isotropy direction ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .complex_geometry import nabla_tilde
from .connection import SignConvention, lambda_coeff
from .errors import DomainError
from .exact import ZERO, ComplexScalar, ExactScalar, I, rational
from .trig import TrigField, ZERO_FIELD, basis_f, basis_g, require_mean_zero
from .virasoro import CentralParams


class ComplexField:
    """Sparse ``sum_k c_k L_k`` with Gaussian rational ``c_k``.

    Index 0 is allowed so that brackets can carry their ``h`` component;
    the connection refuses it.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, object] | None = None):
        c = {}
        for k, v in (coefficients or {}).items():
            v = ComplexScalar.coerce(v)
            if v:
                c[int(k)] = v
        self._c = c

    @classmethod
    def basis(cls, k: int) -> "ComplexField":
        return cls({k: 1})

    def items(self) -> Iterator[tuple[int, ComplexScalar]]:
        return iter(sorted(self._c.items()))

    def coefficient(self, k: int) -> ComplexScalar:
        return self._c.get(k, ComplexScalar())

    @property
    def indices(self) -> list[int]:
        return sorted(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, ComplexField):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "ComplexField") -> "ComplexField":
        if not isinstance(other, ComplexField):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c[k] + v if k in c else v
        return ComplexField(c)

    def __neg__(self):
        return ComplexField({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, ComplexField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, s) -> "ComplexField":
        if isinstance(s, (ComplexField, float)):
            return NotImplemented
        s = ComplexScalar.coerce(s)
        return ComplexField({k: s * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"ComplexField({format_complex_field(self)!r})"


def format_complex_field(z: ComplexField) -> str:
    if not z:
        return "0"
    return " + ".join(f"({v})*L_{k}" for k, v in z.items())


def to_complex(x: TrigField, y: TrigField = ZERO_FIELD) -> ComplexField:
    """``x + i y`` in the L-basis, using ``f_k = (L_k + L_-k)/2`` and
    ``g_k = (L_k - L_-k)/(2i)``."""
    require_mean_zero(x, y)
    half = rational(1, 2)
    c: dict[int, ComplexScalar] = {}

    def add(k, v):
        c[k] = c[k] + v if k in c else v

    for unit, fld in ((ComplexScalar(1), x), (I, y)):
        for k, (a, b) in fld.items():
            # a f_k + b g_k = (a - ib)/2 L_k + (a + ib)/2 L_-k
            add(k, unit * ComplexScalar(half * a, -half * b))
            add(-k, unit * ComplexScalar(half * a, half * b))
    return ComplexField(c)


def from_complex(z: ComplexField) -> tuple[TrigField, TrigField]:
    """Real and imaginary parts ``(X, Y)`` with ``z = X + iY``."""
    acc: dict[int, list] = {}
    for k, v in z.items():
        s = 1 if k > 0 else -1
        ak = abs(k)
        slot = acc.setdefault(ak, [ZERO, ZERO, ZERO, ZERO])
        p, q = v.re, v.im
        # (p + iq)(f + i s g) = p f - s q g + i (q f + s p g)
        slot[0] += p
        slot[2] += q
        if k:
            slot[1] -= s * q
            slot[3] += s * p
    X = TrigField({k: (v[0], v[1]) for k, v in acc.items()})
    Y = TrigField({k: (v[2], v[3]) for k, v in acc.items()})
    return X, Y


def _bilinear(op, a: ComplexField, b: ComplexField) -> ComplexField:
    out: dict[int, ComplexScalar] = {}
    for j, u in a.items():
        for k, v in b.items():
            r = op(j, k)
            if r is None:
                continue
            idx, coef = r
            w = u * v * coef
            out[idx] = out[idx] + w if idx in out else w
    return ComplexField(out)


def _bracket_basis(a: int, b: int):
    # [L_a, L_b] = i (b - a) L_{a+b}; the four signed cases collapse to this
    if a == b:
        return None
    return a + b, ComplexScalar(ZERO, rational(b - a))


def complex_bracket(a: ComplexField, b: ComplexField) -> ComplexField:
    return _bilinear(_bracket_basis, a, b)


def split_h(z: ComplexField) -> tuple[ComplexField, ComplexField]:
    """``(z_m, z_h)``: drop or keep the ``L_0`` component."""
    m = ComplexField({k: v for k, v in z.items() if k})
    h = ComplexField({0: z.coefficient(0)})
    return m, h


def nabla_tilde_basis(params: CentralParams, a: int, b: int):
    """``nabla_tilde_{L_a} L_b`` as ``(index, coefficient)`` or None for zero."""
    if a == 0 or b == 0:
        raise DomainError("L_0 is the isotropy direction; nabla_tilde is defined on m only")
    m, n = abs(a), abs(b)
    lam = lambda p, q: lambda_coeff(params, p, q)  # noqa: E731
    if a > 0 and b > 0:
        return a + b, ComplexScalar(ZERO, -2 * lam(m, n))
    if a < 0 and b < 0:
        return a + b, ComplexScalar(ZERO, 2 * lam(m, n))
    if a < 0:
        # L_{-m} L_n
        if n > m:
            return n - m, ComplexScalar(ZERO, rational(m + n))
        return None
    # L_m L_{-n}
    if n > m:
        return m - n, ComplexScalar(ZERO, rational(-(m + n)))
    return None


def nabla_tilde_complex(params: CentralParams, a: ComplexField, b: ComplexField) -> ComplexField:
    """Complex-bilinear extension of the L-basis table."""
    return _bilinear(lambda j, k: nabla_tilde_basis(params, j, k), a, b)


def nabla_tilde_complexified(params: CentralParams, a: ComplexField, b: ComplexField,
                             convention=SignConvention.PAPER) -> ComplexField:
    """Same operator computed through the real ``nabla - Q``."""
    if a.coefficient(0) or b.coefficient(0):
        raise DomainError("L_0 is the isotropy direction; nabla_tilde is defined on m only")
    x1, y1 = from_complex(a)
    x2, y2 = from_complex(b)
    nt = lambda u, v: nabla_tilde(params, u, v, convention)  # noqa: E731
    re = nt(x1, x2) - nt(y1, y2)
    im = nt(x1, y2) + nt(y1, x2)
    return to_complex(re, im)


def curvature(params: CentralParams, x: ComplexField, y: ComplexField, z: ComplexField) -> ComplexField:
    """``R_xy z = D_x D_y z - D_y D_x z - D_{[x,y]_m} z - [[x,y]_h, z]`` with
    ``D = nabla_tilde``."""
    nt = lambda u, v: nabla_tilde_complex(params, u, v)  # noqa: E731
    br_m, br_h = split_h(complex_bracket(x, y))
    return nt(x, nt(y, z)) - nt(y, nt(x, z)) - nt(br_m, z) - complex_bracket(br_h, z)


def _require_positive_index(*ks: int) -> None:
    for k in ks:
        if k < 1:
            raise DomainError(f"index must be a positive integer, got {k}")


def ricci_coefficient(params: CentralParams, m: int, n: int) -> ExactScalar:
    """Coefficient of ``L_-m`` in ``R_{L_-m, L_n} L_-n`` from the case formulas."""
    _require_positive_index(m, n)
    lam = lambda p, q: lambda_coeff(params, p, q)  # noqa: E731
    if m < n:
        return -2 * (m + 2 * n) * lam(m, n) - (2 * n - m) * (m + n)
    if m > n:
        return -2 * (m + 2 * n) * lam(m, n) + 2 * (m + n) * lam(m - n, n)
    return -6 * n * lam(n, n) - 2 * n * n


def ricci_coefficient_from_curvature(params: CentralParams, m: int, n: int) -> ComplexScalar:
    """Same coefficient, read off the full curvature evaluation."""
    _require_positive_index(m, n)
    r = curvature(params, ComplexField.basis(-m), ComplexField.basis(n), ComplexField.basis(-n))
    return r.coefficient(-m)


def _A(params: CentralParams, k: int, n: int) -> ExactScalar:
    return 2 * (k + 2 * n) * lambda_coeff(params, k, n)


def ricci_partial(params: CentralParams, n: int, M: int) -> tuple[ExactScalar, ExactScalar]:
    """``(partial, boundary)`` at cutoff ``M``.

    ``partial`` is the truncated trace ``sum_{m<=M} coeff(m, n) / theta_n``;
    ``boundary`` is the telescoping remainder
    ``sum_{m=M-n+1}^{M} A(m) / theta_n`` that the regularization drops.
    """
    _require_positive_index(n)
    if M < n:
        raise DomainError(f"cutoff M={M} must be >= n={n}")
    params.require_positive(M + n)
    th = params.theta(n)
    partial = sum((ricci_coefficient(params, m, n) for m in range(1, M + 1)), ZERO) / th
    boundary = sum((_A(params, m, n) for m in range(M - n + 1, M + 1)), ZERO) / th
    return partial, boundary


def ricci_regularized(params: CentralParams, n: int) -> ExactScalar:
    """Telescoped trace: the ``m <= n`` block plus the head ``sum_{k<=n} A(k)``.

    Built from the connection coefficients, so comparing it with
    :func:`ricci_closed_form` is a real check.
    """
    _require_positive_index(n)
    params.require_positive(2 * n)
    head = sum((ricci_coefficient(params, m, n) + _A(params, m, n) for m in range(1, n + 1)), ZERO)
    return head / params.theta(n)


def ricci_polynomial_sum(params: CentralParams, n: int) -> ExactScalar:
    """``-(1/theta_n) sum_{m=1}^{n} (m+n)(2n-m)``."""
    _require_positive_index(n)
    params.require_positive(n)
    return -sum(((m + n) * (2 * n - m) for m in range(1, n + 1)), 0) / params.theta(n)


def ricci_closed_form(params: CentralParams, n: int) -> ExactScalar:
    """``-(13 n^3 - n) / (6 theta_n)``."""
    _require_positive_index(n)
    params.require_positive(n)
    return rational(-(13 * n ** 3 - n), 6) / params.theta(n)


@dataclass
class RicciReport:
    n: int
    regularized: ExactScalar
    closed_form: ExactScalar
    partial: list = field(default_factory=list)  # (M, partial_sum, boundary_term)

    @property
    def agrees(self) -> bool:
        return self.regularized == self.closed_form and all(
            p + b == self.regularized for _, p, b in self.partial
        )


def ricci_report(params: CentralParams, n: int, cutoffs=()) -> RicciReport:
    rows = []
    for M in sorted(set(cutoffs)):
        p, b = ricci_partial(params, n, M)
        rows.append((M, p, b))
    return RicciReport(n, ricci_regularized(params, n), ricci_closed_form(params, n), rows)


def real_basis_to_complex(kind: str, k: int) -> ComplexField:
    """``f_k`` or ``g_k`` in the L-basis."""
    return to_complex(basis_f(k) if kind == "f" else basis_g(k))
