"""Central extension of the circle vector-field algebra.

``theta_k = 2hk + (c/12)(k^3 - k)`` are the diagonal weights of the metric
``B(x, y) = omega(x, J y)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .errors import DomainError, ParameterError
from .exact import ZERO, ExactScalar, format_scalar, rational
from .trig import (
    TrigField,
    ZERO_FIELD,
    BasisLabel,
    apply_J,
    bracket,
    derivative,
    integral_pair,
    require_mean_zero,
)


@functools.lru_cache(maxsize=65536)
def _theta(c: ExactScalar, h: ExactScalar, k: int) -> ExactScalar:
    return 2 * h * k + c / 12 * (k ** 3 - k)


@dataclass(frozen=True)
class CentralParams:
    """Concrete rational central charge ``c`` and weight ``h``.

    If ``validated_max_mode`` is positive, ``theta_k > 0`` is checked for
    ``1 <= k <= validated_max_mode`` at construction.  Everything else checks
    lazily through :meth:`require_positive`.
    """

    c: ExactScalar
    h: ExactScalar
    validated_max_mode: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c", rational(self.c))
        object.__setattr__(self, "h", rational(self.h))
        if self.validated_max_mode > 0:
            self.require_positive(self.validated_max_mode)

    def theta(self, k: int) -> ExactScalar:
        return _theta(self.c, self.h, k)

    def first_nonpositive(self, max_mode: int) -> int | None:
        """Smallest ``1 <= k <= max_mode`` with ``theta_k <= 0``, or None."""
        if max_mode < 1:
            return None
        # theta_k / k = 2h + c(k^2 - 1)/12 is monotone in k
        if self.theta(1) <= 0:
            return 1
        if self.c >= 0 or self.theta(max_mode) > 0:
            return None
        lo, hi = 1, max_mode
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.theta(mid) > 0:
                lo = mid
            else:
                hi = mid
        return hi

    def require_positive(self, max_mode: int) -> None:
        k = self.first_nonpositive(max_mode)
        if k is not None:
            raise ParameterError(
                f"theta_{k} = {format_scalar(self.theta(k))} <= 0 for c={format_scalar(self.c)}, "
                f"h={format_scalar(self.h)}; metric needs theta_k > 0 up to mode {max_mode}"
            )

    def describe(self) -> dict:
        return {"c": format_scalar(self.c), "h": format_scalar(self.h)}


PRESETS = {
    # h = 0, c = 6: fundamental cocycle, not usable as a metric
    "fundamental": CentralParams(rational(6), rational(0)),
    # theta_k = k^3
    "cubic": CentralParams(rational(12), rational(1, 2)),
}


def theta(params: CentralParams, k: int) -> ExactScalar:
    return params.theta(k)


def cocycle_operator(params: CentralParams, x: TrigField) -> TrigField:
    """``(2h - c/12) x' - (c/12) x^(3)``.

    Per mode ``x^(3) = -k^2 x'``, so the operator scales ``x'`` mode by mode.
    """
    out = {}
    for k, (a, b) in derivative(x).items():
        w = _cocycle_weight(params.c, params.h, k)
        out[k] = (w * a if a else a, w * b if b else b)
    return TrigField._raw(out)


@functools.lru_cache(maxsize=65536)
def _cocycle_weight(c: ExactScalar, h: ExactScalar, k: int) -> ExactScalar:
    return (2 * h - c / 12) + c / 12 * (k * k)


def cocycle(params: CentralParams, x: TrigField, y: TrigField) -> ExactScalar:
    """``omega_{c,h}(x, y) = <(2h - c/12) x' - (c/12) x^(3), y>``.

    Same as ``integral_pair(cocycle_operator(params, x), y)`` but only visits
    modes present in both fields.
    """
    total = ZERO
    for k, (a, b) in x.items():
        if not k or (a2b2 := y.get(k)) is None:
            continue
        a2, b2 = a2b2
        # D x at mode k is w * k * (b, -a)
        total += _cocycle_weight(params.c, params.h, k) * k * (b * a2 - a * b2)
    return total / 2


def cocycle_basis(params: CentralParams, a: BasisLabel, b: BasisLabel) -> ExactScalar:
    """Basis values of omega: nonzero only on ``(f_m, g_m)`` and ``(g_m, f_m)``."""
    (ka, m), (kb, n) = a, b
    if m != n or m == 0 or ka == kb:
        return ZERO
    half = params.theta(m) / 2
    return -half if ka == "f" else half


def inner_B(params: CentralParams, x: TrigField, y: TrigField) -> ExactScalar:
    """Metric ``B(x, y) = omega(x, J y)`` on mean-zero fields."""
    require_mean_zero(x, y)
    params.require_positive(max(x.max_mode, y.max_mode))
    return _inner_B_unchecked(params, x, y)


def _inner_B_unchecked(params: CentralParams, x: TrigField, y: TrigField) -> ExactScalar:
    return cocycle(params, x, apply_J(y))


def inner_B_diagonal(params: CentralParams, x: TrigField, y: TrigField) -> ExactScalar:
    """Shortcut ``B(x, y) = 1/2 sum_k theta_k (a_k a'_k + b_k b'_k)``."""
    require_mean_zero(x, y)
    params.require_positive(max(x.max_mode, y.max_mode))
    total = ZERO
    for k, (a, b) in x.items():
        a2, b2 = y.a(k), y.b(k)
        if a2 or b2:
            total += params.theta(k) * (a * a2 + b * b2)
    return total / 2


@dataclass(frozen=True)
class VirasoroElement:
    """``central * kappa + field``."""

    central: ExactScalar = ZERO
    field: TrigField = field(default_factory=TrigField)

    def __post_init__(self):
        object.__setattr__(self, "central", rational(self.central))

    def __add__(self, other: "VirasoroElement") -> "VirasoroElement":
        return VirasoroElement(self.central + other.central, self.field + other.field)

    def __neg__(self):
        return VirasoroElement(-self.central, -self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return VirasoroElement(s * self.central, s * self.field)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.central) or bool(self.field)

    def is_zero(self) -> bool:
        return not self


KAPPA = VirasoroElement(rational(1), ZERO_FIELD)


def element(x: TrigField, central=ZERO) -> VirasoroElement:
    return VirasoroElement(rational(central), x)


def virasoro_bracket(params: CentralParams, X: VirasoroElement, Y: VirasoroElement) -> VirasoroElement:
    return VirasoroElement(cocycle(params, X.field, Y.field), bracket(X.field, Y.field))


def check_jacobi(params: CentralParams, X: VirasoroElement, Y: VirasoroElement, Z: VirasoroElement) -> VirasoroElement:
    """Jacobi defect ``[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]``; zero for a Lie algebra."""
    br = lambda p, q: virasoro_bracket(params, p, q)  # noqa: E731
    return br(br(X, Y), Z) + br(br(Y, Z), X) + br(br(Z, X), Y)


