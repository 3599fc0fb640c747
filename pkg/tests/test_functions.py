from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from nga.functions import (HYPER, POLY, TRIG, FunctionElement, coordinate_monomials, d_dt, d_dx,
                           multiply, tau_split, taylor)
from nga.scalars import ScalarSum

from strategies import scalar_sums

tau = ScalarSum.param("tau")


def test_c_squared_reduces():
    for mode, sign in ((HYPER, 1), (TRIG, -1)):
        C, S = FunctionElement.C(mode), FunctionElement.S(mode)
        assert C * C == FunctionElement.one(mode) + (S * S).scale(sign)
        assert all(key[3] <= 1 for key in (C * C * C).terms)


def test_polynomial_product():
    x1, x2, t = FunctionElement.x(1), FunctionElement.x(2), FunctionElement.t()
    assert multiply(x1 * t, x2 * t).render() == "x1*x2*t^2"


def test_mode_mismatch():
    with pytest.raises(ValueError):
        FunctionElement.x(1) * FunctionElement.x(1, HYPER)
    with pytest.raises(ValueError):
        FunctionElement.S(POLY)


def test_derivatives():
    t = FunctionElement.t()
    assert d_dt(t ** 3) == (t ** 2).scale(3)
    assert d_dt(FunctionElement.S(HYPER)) == FunctionElement.C(HYPER).scale(tau ** -1)
    assert d_dt(FunctionElement.C(TRIG)) == -FunctionElement.S(TRIG).scale(tau ** -1)
    x1, x2 = FunctionElement.x(1), FunctionElement.x(2)
    assert d_dx(1, x1 * x1 * x2) == (x1 * x2).scale(2)
    assert d_dx(3, x1) == FunctionElement()


def test_render_and_latex():
    f = (FunctionElement.C(HYPER) - 1).scale(tau ** 2 * 2)
    assert f.render() == "2*tau^2*C - 2*tau^2"
    assert f.latex() == "2 \\tau^{2} \\cosh\\left(\\frac{t}{\\tau}\\right) - 2 \\tau^{2}"
    assert "\\sin" in FunctionElement.S(TRIG).latex()


def test_json_terms():
    f = FunctionElement.x(2) * FunctionElement.t() ** 2
    assert f.to_json() == [{"x": {"2": 1}, "t": 2, "S": 0, "C": 0,
                            "coeff": [{"re": "1", "im": "0", "params": {}}]}]


@pytest.mark.parametrize("mode", [HYPER, TRIG])
def test_taylor_coefficients_through_order_12(mode):
    sign = 1 if mode == HYPER else -1
    for name in ("S", "C"):
        f = getattr(FunctionElement, name)(mode)
        series, rem = taylor(f, 12)
        assert rem == 13
        for k in range(13):
            odd = name == "S"
            if k % 2 != odd:
                want = 0
            else:
                want = Fraction(sign ** (k // 2), factorial(k))
            coeff = series.coefficient(((), k, 0, 0))
            assert coeff == ScalarSum.param("tau", -k) * want if want else not coeff


def test_tau_split():
    f = FunctionElement.t() + FunctionElement.t().scale(tau ** -2)
    zero, rest = tau_split(f)
    assert zero == FunctionElement.t() and rest == FunctionElement.t().scale(tau ** -2)


def test_coordinate_monomials_count():
    # monomials in t, x1, x2 of degree <= 2: C(5, 2) = 10
    assert len(coordinate_monomials(2, 2)) == 10
    assert all(key[3] <= 1 for f in coordinate_monomials(2, 3, HYPER, True) for key in f.terms)


@st.composite
def functions(draw, mode):
    atoms = [FunctionElement.x(1, mode), FunctionElement.x(2, mode), FunctionElement.t(mode)]
    if mode != POLY:
        atoms += [FunctionElement.S(mode), FunctionElement.C(mode)]
    f = FunctionElement(mode)
    for _ in range(draw(st.integers(0, 3))):
        term = FunctionElement.constant(draw(scalar_sums(max_terms=2)), mode)
        for a in draw(st.lists(st.sampled_from(atoms), max_size=4)):
            term = term * a
        f = f + term
    return f


modes = st.sampled_from([POLY, HYPER, TRIG])


@given(modes.flatmap(lambda m: st.tuples(functions(m), functions(m))))
def test_leibniz(pair):
    f, g = pair
    assert d_dt(f * g) == d_dt(f) * g + f * d_dt(g)
    assert d_dx(1, f * g) == d_dx(1, f) * g + f * d_dx(1, g)


@given(modes.flatmap(functions))
def test_canonical_form(f):
    assert f - f == FunctionElement(f.mode)
    assert all(key[3] <= 1 for key in (f * f * f).terms)
    assert all(key[3] <= 1 for key in d_dt(f * f).terms)
