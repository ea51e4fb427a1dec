from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vircurv.errors import DomainError, ParameterError
from vircurv.exact import rational
from vircurv.trig import TrigField, apply_J, basis, basis_f as f, basis_g as g, basis_labels, bracket
from vircurv.virasoro import (
    KAPPA,
    PRESETS,
    CentralParams,
    check_jacobi,
    cocycle,
    element,
    inner_B,
    inner_B_diagonal,
    theta,
    virasoro_bracket,
)

from test_trig import fields


def test_theta(cubic):
    assert theta(cubic, 3) == 27
    assert theta(cubic, 0) == 0
    assert theta(cubic, -2) == -8
    assert theta(CentralParams(1, 1), 2) == rational(9, 2)


def test_positivity_check():
    fund = PRESETS["fundamental"]
    assert fund.first_nonpositive(5) == 1
    with pytest.raises(ParameterError):
        CentralParams(6, 0, validated_max_mode=3)
    # c < 0: theta_k eventually turns negative; bisection finds the first one
    p = CentralParams(-12, 50)
    first = next(k for k in range(1, 100) if p.theta(k) <= 0)
    assert p.first_nonpositive(99) == first
    assert p.first_nonpositive(first - 1) is None


def test_cocycle_examples(cubic):
    assert cocycle(cubic, f(2), g(2)) == -4
    assert cocycle(cubic, f(3), f(3)) == 0


@given(fields(), fields())
def test_cocycle_antisymmetric(x, y):
    p = PRESETS["cubic"]
    assert cocycle(p, x, y) == -cocycle(p, y, x)
    assert cocycle(p, x, x) == 0


def test_fundamental_cocycle_by_quadrature():
    # independent float evaluation of -(1/4pi) int (f' + f''') g dt
    p = PRESETS["fundamental"]
    t = np.linspace(0, 2 * np.pi, 512, endpoint=False)
    funcs = {}
    for kind, m in basis_labels(10):
        s = np.sin(m * t)
        c = np.cos(m * t)
        if kind == "f":
            funcs[(kind, m)] = (c, -m * s + m ** 3 * s)
        else:
            funcs[(kind, m)] = (s, m * c - m ** 3 * c)
    for a, b in product(funcs, funcs):
        fa, dfa = funcs[a]
        gb, _ = funcs[b]
        numeric = -(dfa * gb).mean() * 2 * np.pi / (4 * np.pi)
        assert abs(float(cocycle(p, basis(a), basis(b))) - numeric) < 1e-9, (a, b)


def test_virasoro_bracket(cubic):
    assert not virasoro_bracket(cubic, KAPPA, element(f(5)) + KAPPA)
    br = virasoro_bracket(cubic, element(f(2)), element(g(2)))
    assert br.central == -4
    assert br.field == bracket(f(2), g(2))
    assert not virasoro_bracket(cubic, element(f(1)), element(f(1)))


@pytest.mark.parametrize("p", [PRESETS["cubic"], CentralParams(1, 1), PRESETS["fundamental"]])
def test_jacobi(p):
    elems = [element(basis(lb)) for lb in basis_labels(6)] + [KAPPA]
    for X, Y, Z in product(elems, repeat=3):
        assert not check_jacobi(p, X, Y, Z)


def test_jacobi_examples(cubic):
    assert not check_jacobi(cubic, element(f(1)), element(f(2)), element(g(3)))
    assert not check_jacobi(cubic, KAPPA, element(f(1)), element(g(1)))


def test_inner_B(cubic):
    assert inner_B(cubic, f(2), f(2)) == 4
    assert inner_B(cubic, f(3), g(3)) == 0
    with pytest.raises(DomainError):
        inner_B(cubic, f(0), f(1))
    with pytest.raises(ParameterError):
        inner_B(PRESETS["fundamental"], f(1), f(1))


@given(fields(), fields())
def test_inner_B_identities(x, y):
    p = PRESETS["cubic"]
    assert inner_B(p, x, y) == inner_B(p, y, x)
    assert inner_B(p, x, y) == inner_B_diagonal(p, x, y)
    assert inner_B(p, apply_J(x), apply_J(y)) == inner_B(p, x, y)
    if x:
        assert inner_B(p, x, x) > 0
