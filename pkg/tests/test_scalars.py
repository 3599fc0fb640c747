from fractions import Fraction

import pytest
from hypothesis import given

from nga.scalars import Scalar, ScalarSum, latex, render, to_json

from strategies import scalar_sums

i = ScalarSum.imag_unit()
alpha = ScalarSum.param("alpha")
tau = ScalarSum.param("tau")


def test_i_squared():
    assert i * i == ScalarSum.number(-1)


def test_like_powers_multiply():
    assert (alpha * 2) * (alpha * 3) == ScalarSum.param("alpha", 2) * 6


def test_laurent_cancellation():
    assert (i * ScalarSum.param("tau", -1)) * tau == i


def test_additive_inverse_is_unique_zero():
    z = alpha + (-alpha)
    assert z == ScalarSum.zero()
    assert not z and len(z) == 0


def test_gaussian_sum():
    s = ScalarSum.one() + i
    assert s.terms == [Scalar(1, 1)]


def test_like_term_merge():
    t2 = ScalarSum.param("tau", 2)
    assert t2 * 2 + t2 * 3 == t2 * 5


def test_negative_exponent_only_for_tau():
    with pytest.raises(ValueError):
        ScalarSum.param("alpha", -1)
    with pytest.raises(ValueError):
        Scalar(1, 0, {"beta": -2})


def test_scalar_zero_is_canonical():
    assert Scalar(0, 0, {"alpha": 3}).params == ()


def test_render_canonical():
    s = i * ScalarSum.param("alpha", 2) * ScalarSum.param("tau", -1) * Fraction(3, 2)
    assert render(s) == "(3/2)*i*alpha^2*tau^-1"
    assert render(ScalarSum.number(Fraction(1, 2), 1)) == "(1/2 + i)"
    assert render(ScalarSum.zero()) == "0"


def test_latex_powers_of_indexed_params():
    s = ScalarSum.param("alpha_1_2", 2)
    assert latex(s) == "{\\alpha^{12}}^{2}"


def test_to_json_shape():
    assert to_json(alpha * 2) == [{"re": "2", "im": "0", "params": {"alpha": 1}}]


def test_substitute():
    s = alpha * alpha + tau
    assert s.substitute({"alpha": Fraction(1, 2)}) == tau + Fraction(1, 4)


def test_degree_ignores_tau():
    s = ScalarSum.param("alpha", 2) * ScalarSum.param("tau", 5) + alpha
    assert s.degree() == 2 and s.low_degree() == 1
    assert s.truncate(1) == alpha


@given(scalar_sums(), scalar_sums(), scalar_sums())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(scalar_sums())
def test_self_difference_is_zero(a):
    assert a - a == ScalarSum.zero()
    assert (a - a).terms == []


@given(scalar_sums())
def test_conjugate_is_involution(a):
    assert a.conjugate().conjugate() == a
