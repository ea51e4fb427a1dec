"""Closed-form basis tables, written out case by case.

These are the displayed formulas for brackets, the metric, ``nabla``,
``nabla J``, ``Q`` and ``nabla_tilde`` on ``f_k``, ``g_k``.  They are kept
independent of the operator code so each can serve as an oracle for the
other.  Every function takes ``(kind_a, m)``, ``(kind_b, n)`` labels and
returns a :class:`TrigField`.
"""

from __future__ import annotations

from .connection import lambda_coeff
from .exact import ZERO, rational
from .trig import BasisLabel, TrigField, ZERO_FIELD, basis_f, basis_g
from .virasoro import CentralParams


def _f(k: int) -> TrigField:
    return basis_f(k)


def _g(k: int) -> TrigField:
    # sin(0t) = 0
    return basis_g(k) if k else ZERO_FIELD


def _sgn(k: int) -> int:
    return (k > 0) - (k < 0)


def bracket_table(a: BasisLabel, b: BasisLabel) -> TrigField:
    """Structure constants of ``[f, g] = f g' - f' g`` on cos/sin modes."""
    (ka, m), (kb, n) = a, b
    half = rational(1, 2)
    if ka == "f" and kb == "f":
        if m == n:
            return ZERO_FIELD
        return half * ((m - n) * _g(m + n) + (m + n) * _sgn(m - n) * _g(abs(m - n)))
    if ka == "g" and kb == "g":
        if m == n:
            return ZERO_FIELD
        return half * ((n - m) * _g(m + n) + (m + n) * _sgn(m - n) * _g(abs(m - n)))
    if ka == "f":
        return half * ((n - m) * _f(m + n) + (m + n) * _f(abs(m - n)))
    return -bracket_table(b, a)


def inner_B_table(params: CentralParams, a: BasisLabel, b: BasisLabel):
    return params.theta(a[1]) / 2 if a == b else ZERO


def nabla_table(params: CentralParams, a: BasisLabel, b: BasisLabel) -> TrigField:
    """``nabla_a b`` under the ``paper`` sign convention."""
    (ka, m), (kb, n) = a, b
    lam = lambda p, q: lambda_coeff(params, p, q)  # noqa: E731
    s = rational(m + n, 2)
    if ka == "f" and kb == "f":
        if n > m:
            return lam(m, n) * _g(n + m)
        if n < m:
            return lam(m, n) * _g(n + m) + s * _g(m - n)
        return lam(n, n) * _g(2 * n)
    if ka == "f" and kb == "g":
        if n > m:
            return -lam(m, n) * _f(n + m)
        if n < m:
            return -lam(m, n) * _f(n + m) + s * _f(m - n)
        return -lam(n, n) * _f(2 * n)
    if ka == "g" and kb == "f":
        # direction g_m, argument f_n
        if m > n:
            return -lam(m, n) * _f(n + m) - s * _f(m - n)
        if m < n:
            return -lam(m, n) * _f(n + m)
        return -lam(n, n) * _f(2 * n)
    if n > m:
        return -lam(m, n) * _g(n + m)
    if n < m:
        return s * _g(m - n) - lam(m, n) * _g(n + m)
    return -lam(n, n) * _g(2 * n)


def nabla_J_table(params: CentralParams, a: BasisLabel, b: BasisLabel) -> TrigField:
    """``(nabla_a J) b``; zero unless the argument mode is below the direction mode."""
    (ka, m), (kb, n) = a, b
    if n >= m:
        return ZERO_FIELD
    s = m + n
    if ka == "f" and kb == "f":
        return -s * _f(m - n)
    if ka == "f":
        return s * _g(m - n)
    if kb == "f":
        return -s * _g(m - n)
    return -s * _f(m - n)


def q_table(params: CentralParams, a: BasisLabel, b: BasisLabel) -> TrigField:
    (ka, m), (kb, n) = a, b
    if m == n:
        return ZERO_FIELD
    s = rational(m + n, 2)
    d = abs(n - m)
    if ka == kb:
        return s * _g(d)
    if ka == "f":
        return (-s if n > m else s) * _f(d)
    return (s if n > m else -s) * _f(d)


def nabla_tilde_table(params: CentralParams, a: BasisLabel, b: BasisLabel) -> TrigField:
    (ka, m), (kb, n) = a, b
    lam = lambda p, q: lambda_coeff(params, p, q)  # noqa: E731
    s = rational(m + n, 2)
    if ka == "f" and kb == "f":
        if n > m:
            return lam(m, n) * _g(n + m) - s * _g(n - m)
        return lam(m, n) * _g(n + m)
    if ka == "f" and kb == "g":
        if n > m:
            return s * _f(n - m) - lam(m, n) * _f(n + m)
        return -lam(m, n) * _f(n + m)
    if ka == "g" and kb == "f":
        # direction g_m, argument f_n
        if m < n:
            return -lam(m, n) * _f(n + m) - s * _f(n - m)
        return -lam(m, n) * _f(n + m)
    if n > m:
        return -lam(m, n) * _g(n + m) - s * _g(n - m)
    return -lam(m, n) * _g(n + m)


def complex_bracket_table(a: int, b: int):
    """``[L_a, L_b]`` by the four signed cases, as ``(index, i-coefficient)``.

    The value is ``coef * i * L_index``.
    """
    if a == b:
        return None
    m, n = abs(a), abs(b)
    if a > 0 and b > 0:
        return m + n, n - m
    if a < 0 and b > 0:
        return n - m, m + n
    if a > 0 and b < 0:
        return m - n, -(m + n)
    return -m - n, m - n


TABLES = {
    "nabla": nabla_table,
    "nabla_J": nabla_J_table,
    "q_tensor": q_table,
    "nabla_tilde": nabla_tilde_table,
}
