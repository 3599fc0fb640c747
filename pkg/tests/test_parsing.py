from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nga.algebra import AlgebraSpec, G, H, build_algebra
from nga.enveloping import EnvElement, normal_order
from nga.functions import HYPER, POLY, TRIG, FunctionElement
from nga.parsing import ParseError, parse_element, parse_function, parse_scalar, tokenize
from nga.scalars import ScalarSum, render

from strategies import scalar_sums

TABLE = build_algebra(AlgebraSpec(2, 3))


def test_scalar_examples():
    s = parse_scalar("(3/2)*i*alpha^2*tau^-1")
    assert render(s) == "(3/2)*i*alpha^2*tau^-1"
    assert parse_scalar("(1/2 + i)") == ScalarSum.number(Fraction(1, 2), 1)
    assert parse_scalar("-tau^-2 + 3") == ScalarSum.number(3) - ScalarSum.param("tau", -2)


def test_tokenize_generators():
    kinds = [k for k, _ in tokenize("H*G:1:1 - i*M:1:2")]
    assert kinds == ["gen", "op", "gen", "op", "name", "op", "gen"]


@pytest.mark.parametrize("bad", ["", "2 +", "(alpha", "alpha^x", "alpha/beta", "3 $"])
def test_scalar_errors(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_element_example():
    e = parse_element("H*G:1:1 - i*G:1:0", TABLE)
    assert e == normal_order((G(1, 1), H), TABLE)


def test_element_normal_orders_input():
    assert parse_element("G:1:1*H", TABLE) == normal_order((G(1, 1), H), TABLE)


def test_function_examples():
    f = parse_function("2*tau^2*C - 2*tau^2", HYPER)
    tau2 = ScalarSum.param("tau", 2)
    assert f == (FunctionElement.C(HYPER) - 1).scale(tau2 * 2)
    assert parse_function("x1*x2*t^2", POLY) == FunctionElement.x(1) * FunctionElement.x(2) * \
        FunctionElement.t() ** 2


def test_function_rejects_generators():
    with pytest.raises(ParseError):
        parse_function("H*x1", POLY)


@given(scalar_sums())
def test_scalar_round_trip(s):
    assert parse_scalar(render(s)) == s


gens = st.sampled_from(TABLE.generators)


@given(st.lists(st.lists(gens, max_size=3), max_size=3), scalar_sums(max_terms=2))
def test_element_round_trip(words, c):
    x = EnvElement.scalar(TABLE, c)
    for w in words:
        x = x + normal_order(tuple(w), TABLE)
    assert parse_element(x.render(), TABLE) == x


@st.composite
def functions(draw, mode):
    f = FunctionElement.constant(draw(scalar_sums(max_terms=2)), mode)
    atoms = [FunctionElement.x(1, mode), FunctionElement.x(2, mode), FunctionElement.t(mode)]
    if mode != POLY:
        atoms += [FunctionElement.S(mode), FunctionElement.C(mode)]
    for _ in range(draw(st.integers(0, 3))):
        term = FunctionElement.constant(draw(scalar_sums(max_terms=2)), mode)
        for a in draw(st.lists(st.sampled_from(atoms), max_size=3)):
            term = term * a
        f = f + term
    return f


@given(st.sampled_from([POLY, HYPER, TRIG]).flatmap(functions))
def test_function_round_trip(f):
    assert parse_function(f.render(), f.mode) == f
