from itertools import product

import pytest
from hypothesis import given

from vircurv.connection import lambda_coeff
from vircurv.curvature import (
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
    ricci_report,
    split_h,
    to_complex,
)
from vircurv.errors import DomainError
from vircurv.exact import I, ComplexScalar, rational
from vircurv.trig import ZERO_FIELD, basis_f as f, basis_g as g

from test_trig import fields

L = ComplexField.basis
half = rational(1, 2)


def test_to_complex_examples():
    assert to_complex(f(3)) == half * L(3) + half * L(-3)
    # g_2 = (L_2 - L_-2)/(2i); as an imaginary part it becomes (L_2 - L_-2)/2
    assert to_complex(ZERO_FIELD, g(2)) == half * L(2) - half * L(-2)
    assert to_complex(g(2)) == ComplexScalar(0, -half) * L(2) + ComplexScalar(0, half) * L(-2)
    with pytest.raises(DomainError):
        to_complex(f(0))


@given(fields(), fields())
def test_round_trip(x, y):
    assert from_complex(to_complex(x, y)) == (x, y)


def test_bracket_examples():
    assert complex_bracket(L(1), L(2)) == I * L(3)
    assert complex_bracket(L(-1), L(2)) == 3 * I * L(1)
    assert complex_bracket(L(2), L(2)) == 0
    # the h-component is kept: [L_-n, L_n] = 2in L_0
    m, h = split_h(complex_bracket(L(-3), L(3)))
    assert m == 0 and h == 6 * I * L(0)


def test_nabla_tilde_examples(cubic):
    assert nabla_tilde_complex(cubic, L(1), L(2)) == ComplexScalar(0, rational(-5, 27)) * L(3)
    assert nabla_tilde_complex(cubic, L(-2), L(2)) == 0
    assert nabla_tilde_complex(cubic, L(-1), L(3)) == 4 * I * L(2)
    with pytest.raises(DomainError):
        nabla_tilde_complex(cubic, L(0), L(1))


def test_complexification_commutes(params):
    idx = [k for k in range(-12, 13) if k]
    for a, b in product(idx, idx):
        assert nabla_tilde_complex(params, L(a), L(b)) == nabla_tilde_complexified(params, L(a), L(b)), (a, b)


def test_curvature_examples(cubic):
    assert curvature(cubic, L(1), L(2), L(-2)) == 0
    assert curvature(cubic, L(-1), L(2), L(-2)) == rational(-268, 27) * L(-1)
    for n in range(1, 6):
        expected = -6 * n * lambda_coeff(cubic, n, n) - 2 * n * n
        assert curvature(cubic, L(-n), L(n), L(-n)) == expected * L(-n)


def test_grading(cubic):
    idx = [k for k in range(-6, 7) if k]
    for c, a, b in product(idx, repeat=3):
        r = curvature(cubic, L(c), L(a), L(b))
        assert set(r.indices) <= {a + b + c}


def test_ricci_coefficient(cubic):
    assert ricci_coefficient(cubic, 1, 2) == rational(-268, 27)
    assert ricci_coefficient(cubic, 1, 1) == rational(-25, 8)
    with pytest.raises(DomainError):
        ricci_coefficient(cubic, 0, 1)


def test_ricci_coefficient_two_routes(params):
    for m, n in product(range(1, 16), repeat=2):
        assert ricci_coefficient_from_curvature(params, m, n) == ricci_coefficient(params, m, n)
        if m != n:
            assert curvature(params, L(m), L(n), L(-n)) == 0


def test_regularized_values(cubic):
    assert [ricci_regularized(cubic, n) for n in (1, 2, 3)] == [-2, rational(-17, 8), rational(-58, 27)]
    assert ricci_closed_form(cubic, 1) == -2
    with pytest.raises(DomainError):
        ricci_closed_form(cubic, 0)


def test_partial_examples(cubic):
    p, b = ricci_partial(cubic, 1, 1)
    assert (p, b) == (rational(-25, 8), rational(9, 8))
    p, b = ricci_partial(cubic, 2, 5)
    assert p + b == ricci_regularized(cubic, 2)
    with pytest.raises(DomainError):
        ricci_partial(cubic, 3, 2)


def test_boundary_grows(cubic):
    bs = [ricci_partial(cubic, 2, M)[1] for M in range(2, 40)]
    assert all(b > 0 for b in bs)
    assert bs[-1] > 10 * bs[0]


def test_polynomial_route(params):
    for n in range(1, 30):
        assert ricci_regularized(params, n) == ricci_polynomial_sum(params, n) == ricci_closed_form(params, n)


def test_report(cubic):
    r = ricci_report(cubic, 2, [5, 3, 5])
    assert [row[0] for row in r.partial] == [3, 5]
    assert r.agrees
