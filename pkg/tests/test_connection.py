from itertools import product

import pytest
from hypothesis import given, settings

from vircurv.connection import (
    SignConvention,
    lambda_coeff,
    metric_defect,
    nabla,
    torsion_nabla,
    u_tensor,
    u_tensor_closed,
    u_tensor_oracle,
)
from vircurv.errors import DomainError
from vircurv.exact import rational
from vircurv.tables import nabla_table
from vircurv.trig import basis, basis_f as f, basis_g as g, basis_labels
from vircurv.virasoro import PRESETS, CentralParams

from test_trig import fields

PAPER, NOMIZU = SignConvention.PAPER, SignConvention.NOMIZU


def test_lambda_values(cubic):
    assert lambda_coeff(cubic, 1, 2) == rational(5, 54)
    assert lambda_coeff(cubic, 2, 1) == rational(16, 27)
    assert lambda_coeff(cubic, 1, 1) == rational(3, 16)
    for n in range(1, 10):
        assert lambda_coeff(cubic, n, n) == 3 * n * cubic.theta(n) / (2 * cubic.theta(2 * n))
    with pytest.raises(DomainError):
        lambda_coeff(cubic, 3, -3)


def test_lambda_identity(params):
    for m, n in product(range(-50, 51), repeat=2):
        if m + n:
            assert lambda_coeff(params, m, n) == lambda_coeff(params, n, m) + rational(m - n, 2)


def test_u_examples(cubic):
    assert u_tensor_oracle(cubic, f(1), f(1)) == rational(3, 16) * g(2)
    assert u_tensor_oracle(cubic, f(1), f(2), NOMIZU) == -u_tensor_oracle(cubic, f(1), f(2), PAPER)
    assert u_tensor_closed(cubic, ("f", 1), ("f", 2)) == rational(37, 108) * g(3) + rational(3, 4) * g(1)
    for n in range(1, 6):
        lam = lambda_coeff(cubic, n, n)
        assert u_tensor_closed(cubic, ("f", n), ("g", n)) == -lam * f(2 * n)
        assert u_tensor_closed(cubic, ("g", n), ("g", n)) == -lam * g(2 * n)


@pytest.mark.parametrize("p", [PRESETS["cubic"], CentralParams(1, 1)])
def test_u_closed_equals_oracle(p):
    labels = basis_labels(12)
    for a, b in product(labels, labels):
        assert u_tensor_closed(p, a, b) == u_tensor_oracle(p, basis(a), basis(b)), (a, b)


@settings(max_examples=60)
@given(fields(max_mode=6), fields(max_mode=6))
def test_u_symmetric_and_methods_agree(x, y):
    p = PRESETS["cubic"]
    for conv in SignConvention:
        assert u_tensor(p, x, y, conv) == u_tensor(p, y, x, conv)
    assert u_tensor(p, x, y) == u_tensor(p, x, y, method="oracle")


def test_nabla_examples(cubic):
    assert nabla(cubic, f(1), f(2)) == rational(5, 54) * g(3)
    assert nabla(cubic, f(2), f(1)) == rational(16, 27) * g(3) + rational(3, 2) * g(1)
    assert nabla(cubic, f(3), f(3)) == lambda_coeff(cubic, 3, 3) * g(6)


def test_nabla_table(params):
    labels = basis_labels(15)
    for a, b in product(labels, labels):
        assert nabla(params, basis(a), basis(b)) == nabla_table(params, a, b), (a, b)


def test_torsion_free(cubic):
    assert torsion_nabla(cubic, f(3), g(7)) == 0
    assert torsion_nabla(cubic, f(1), f(2), NOMIZU) == 0
    labels = basis_labels(10)
    for conv in SignConvention:
        for a, b in product(labels, labels):
            assert torsion_nabla(cubic, basis(a), basis(b), conv) == 0


def test_metric_defect(cubic):
    assert metric_defect(cubic, f(1), f(2), g(3), PAPER) == rational(5, 4)
    assert metric_defect(cubic, f(1), f(2), g(3), NOMIZU) == 0
    d = metric_defect(cubic, f(1), f(5), f(5), PAPER)
    from vircurv.virasoro import inner_B
    assert d == 2 * inner_B(cubic, nabla(cubic, f(1), f(5)), f(5))


def test_nomizu_is_metric(params):
    labels = [basis(lb) for lb in basis_labels(6)]
    for x, y, z in product(labels, repeat=3):
        assert metric_defect(params, x, y, z, NOMIZU) == 0


def test_unknown_convention():
    with pytest.raises(DomainError):
        SignConvention.coerce("kobayashi")
