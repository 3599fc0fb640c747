import pytest
from hypothesis import given, settings, strategies as st

from nga.algebra import AlgebraSpec, G, H, M, build_algebra
from nga.enveloping import EnvElement, TensorElement, normal_order, tensor_multiply
from nga.hopf import (Twist, antipode_axiom_check, classical_antipode, classical_axioms_check,
                      classical_coproduct, coassociativity_check, cocycle_check, counit,
                      make_nm_r, make_r, make_single_r, normalization_check, schouten_check,
                      series_inverse, twist_u, twisted_antipode, twisted_coproduct)
from nga.scalars import ScalarSum

TABLE = build_algebra(AlgebraSpec(3, 3))
i = ScalarSum.imag_unit()
theta = ScalarSum.param("theta")


def gen(g):
    return EnvElement.generator(TABLE, g)


def test_primitive_coproduct():
    assert classical_coproduct(gen(H)).render() == "1 ⊗ H + H ⊗ 1"
    one = EnvElement.unit(TABLE)
    assert classical_coproduct(one) == TensorElement.unit(TABLE, 2)


def test_coproduct_is_homomorphism():
    x = normal_order((H, G(1, 0)), TABLE)
    assert classical_coproduct(x) == classical_coproduct(gen(H)) * classical_coproduct(gen(G(1, 0)))


def test_classical_antipode():
    assert classical_antipode(gen(G(2, 3))) == -gen(G(2, 3))
    x = normal_order((H, G(1, 1)), TABLE)
    assert classical_antipode(x) == normal_order((G(1, 1), H), TABLE)
    assert classical_antipode(x).render() == "H*G:1:1 - i*G:1:0"


def test_counit():
    assert counit(EnvElement.unit(TABLE)) == ScalarSum.one()
    assert counit(gen(H) + EnvElement.scalar(TABLE, theta)) == theta


def test_classical_axioms():
    assert classical_axioms_check(TABLE) == []


def test_nm_r_expansion():
    r = make_nm_r(TABLE, 1, 1, {(1, 2): theta})
    want = TensorElement.from_words(TABLE, [(G(1, 1),), (G(2, 1),)], theta) \
        - TensorElement.from_words(TABLE, [(G(2, 1),), (G(1, 1),)], theta)
    assert r.expansion == want


def test_single_r_expansion():
    r = make_single_r(TABLE, 0, 1, 2, 3)
    a = ScalarSum.param("alpha")
    want = TensorElement.from_words(TABLE, [(G(1, 0),), (M(2, 3),)], a) \
        - TensorElement.from_words(TABLE, [(M(2, 3),), (G(1, 0),)], a)
    assert r.expansion == want


@pytest.mark.parametrize("kw", [dict(i=2, k=2, l=3), dict(i=1, k=3, l=2), dict(i=1, k=2, l=4)])
def test_single_r_rejects_bad_indices(kw):
    with pytest.raises(ValueError):
        make_single_r(TABLE, 0, **kw)


def test_single_r_needs_three_dimensions():
    with pytest.raises(ValueError):
        make_single_r(build_algebra(AlgebraSpec(2, 2)), 0, 1, 2, 3)


def test_alpha_matrix_must_be_antisymmetric():
    with pytest.raises(ValueError):
        make_nm_r(TABLE, 0, 1, [[0, theta, 0], [theta, 0, 0], [0, 0, 0]])


def test_make_r_dispatch():
    assert make_r(TABLE, "nm", n=0, m=1).label() == "r^(0,1)"
    assert make_r(TABLE, "single", n=2, i=3, k=1, l=2).label() == "r^(2)[i=3,k=1,l=2]"
    with pytest.raises(ValueError):
        make_r(TABLE, "jordanian")


def test_schouten_zero_for_zero_r():
    assert not schouten_check(TensorElement(TABLE, 2))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.data())
def test_schouten_vanishes(d, data):
    table = build_algebra(AlgebraSpec(3, d))
    n, m = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    assert not schouten_check(make_nm_r(table, n, m))
    if d >= 3:
        k, l = sorted(data.draw(st.lists(st.integers(1, d), min_size=2, max_size=2, unique=True)))
        idx = data.draw(st.sampled_from([j for j in range(1, d + 1) if j not in (k, l)]))
        assert not schouten_check(make_single_r(table, n, idx, k, l))


def test_cocycle_order_zero():
    tw = Twist(make_nm_r(TABLE, 1, 2), 0)
    assert not cocycle_check(tw) and normalization_check(tw)


@pytest.mark.parametrize("r", [make_nm_r(TABLE, 1, 2), make_single_r(TABLE, 0, 1, 2, 3)],
                         ids=["nm-1-2", "single-0"])
def test_twist_validity_order_four(r):
    tw = Twist(r, 4)
    assert normalization_check(tw)
    assert not cocycle_check(tw)
    for g in (H, G(1, 0), G(2, 3), M(1, 2), M(2, 3)):
        assert not coassociativity_check(gen(g), tw)
        assert not antipode_axiom_check(gen(g), tw)


def test_twisted_coproduct_of_boost_is_primitive():
    tw = Twist(make_nm_r(TABLE, 2, 3), 6)
    c = twisted_coproduct(gen(G(3, 1)), tw)
    assert c.terminated and c.value == classical_coproduct(gen(G(3, 1)))


def test_twisted_coproduct_of_time_translation():
    tw = Twist(make_nm_r(TABLE, 1, 1, {(1, 2): theta}), 4)
    c = twisted_coproduct(gen(H), tw)
    assert c.terminated
    extra = c.value - classical_coproduct(gen(H))
    # one bracket [G^(1), H] lowers a boost to a momentum in one slot
    rendered = extra.render()
    assert "G:1:0 ⊗ G:2:1" in rendered and "G:1:1 ⊗ G:2:0" in rendered
    assert extra.degree() == 1


def test_series_inverse():
    u = EnvElement.unit(TABLE) + gen(H).scale(theta) + normal_order((G(1, 1), M(1, 2)), TABLE)
    u = EnvElement.unit(TABLE) + (u - EnvElement.unit(TABLE)).scale(theta)
    inv = series_inverse(u, 4)
    assert tensor_multiply(u, inv, 4) == EnvElement.unit(TABLE)
    assert tensor_multiply(inv, u, 4) == EnvElement.unit(TABLE)
    with pytest.raises(ValueError):
        series_inverse(gen(H), 3)


@pytest.mark.parametrize("r", [make_nm_r(TABLE, 1, 2), make_single_r(TABLE, 0, 1, 2, 3)],
                         ids=["nm-1-2", "single-0"])
def test_u_is_trivial_for_commuting_carriers(r):
    # every r = sum c A (x) B here has [A, B] = 0, so m(r) = 0 and u = exp(-i m(r)) = 1
    for order in (1, 3):
        assert twist_u(Twist(r, order)) == EnvElement.unit(TABLE)
    first = EnvElement.unit(TABLE)
    for c, a, b in r.carriers:
        first = first - normal_order((a, b), TABLE).scale(c * i)
    assert first == EnvElement.unit(TABLE)


def test_zero_twist_antipode_is_classical():
    zero = make_nm_r(TABLE, 1, 2, [[0] * 3] * 3)
    tw = Twist(zero, 4)
    for g in (H, M(1, 3), G(2, 1)):
        assert twisted_antipode(gen(g), tw) == classical_antipode(gen(g))
