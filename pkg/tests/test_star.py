from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nga.algebra import NH_PLUS, AlgebraSpec, build_algebra
from nga.functions import HYPER, FunctionElement, coordinate_monomials
from nga.hopf import Twist, make_nm_r, make_single_r
from nga.newton_hooke import nh_coefficient
from nga.scalars import ScalarSum
from nga.star import (nh_66_factor, spacetime_table, star_commutator,
                      star_product)

TABLE = build_algebra(AlgebraSpec(3, 3))
i = ScalarSum.imag_unit()
theta = ScalarSum.param("theta")
x1, x2, x3, t = (FunctionElement.x(1), FunctionElement.x(2), FunctionElement.x(3),
                 FunctionElement.t())


def test_first_order_example():
    tw = Twist(make_nm_r(TABLE, 1, 1, {(1, 2): theta}))
    assert star_product(x1, x2, tw) == x1 * x2 + (t ** 2).scale(i * theta)


def test_unit_is_neutral():
    tw = Twist(make_single_r(TABLE, 1, 1, 2, 3))
    f = x1 * x2 * t + x3 * x3
    one = FunctionElement.one()
    assert star_product(f, one, tw) == f == star_product(one, f, tw)


def test_time_commutes():
    for r in (make_nm_r(TABLE, 2, 3), make_single_r(TABLE, 3, 1, 2, 3)):
        for x in (x1, x2, x3):
            assert not star_commutator(t, x, Twist(r))


def test_single_family_commutator():
    tw = Twist(make_single_r(TABLE, 2, 1, 2, 3))
    assert star_commutator(x1, x2, tw) == (x3 * t ** 2).scale(i * ScalarSum.param("alpha") * -2)


def test_table_shape_and_antisymmetry():
    tab = spacetime_table(Twist(make_nm_r(TABLE, 2, 3)))
    assert tab.coordinates == ["t", "x1", "x2", "x3"]
    assert len(tab.entries) == 6 and tab.matches
    assert tab.get("x2", "x1") == -tab.get("x1", "x2")
    assert not tab.get("x1", "x1")
    for e in tab.entries:
        if e.entry:
            assert set(key[1] for key in e.entry.terms) == {5}


def test_zero_twist_table():
    zero = make_nm_r(TABLE, 1, 2, [[0] * 3] * 3)
    tab = spacetime_table(Twist(zero))
    assert tab.matches and not any(e.entry for e in tab.entries)


def test_nh_66_factor_is_square_of_f6():
    for sign in (1, -1):
        f6 = nh_coefficient(6, sign)
        assert nh_66_factor(sign) == f6 * f6


def test_nh_tables_match_coefficient_products():
    spec = AlgebraSpec(6, 3, NH_PLUS)
    table = build_algebra(spec)
    for n, m in ((0, 1), (2, 5), (6, 6)):
        assert spacetime_table(Twist(make_nm_r(table, n, m))).matches
    assert spacetime_table(Twist(make_single_r(table, 4, 2, 1, 3))).matches


def test_mode_mismatch():
    tw = Twist(make_nm_r(TABLE, 0, 1))
    with pytest.raises(ValueError):
        star_product(FunctionElement.x(1, HYPER), x2, tw)


def test_substitute_rational_values():
    tab = spacetime_table(Twist(make_nm_r(TABLE, 0, 0)))
    sub = tab.substitute({"alpha_1_2": 3})
    assert sub.get("x1", "x2") == FunctionElement.constant(i * 6)


MONOS = coordinate_monomials(3, 4)
TWISTS = [Twist(make_nm_r(TABLE, n, m)) for n, m in ((0, 0), (1, 2), (3, 3))] + \
    [Twist(make_single_r(TABLE, n, 1, 2, 3)) for n in (0, 3)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TWISTS), st.sampled_from(MONOS), st.sampled_from(MONOS),
       st.sampled_from(MONOS))
def test_star_associativity(tw, f, g, h):
    assert star_product(star_product(f, g, tw), h, tw) == star_product(f, star_product(g, h, tw), tw)


def test_star_associativity_on_coordinates():
    coords = [t, x1, x2, x3]
    for tw in TWISTS:
        for f, g, h in product(coords, repeat=3):
            lhs = star_product(star_product(f, g, tw), h, tw)
            assert lhs == star_product(f, star_product(g, h, tw), tw)
