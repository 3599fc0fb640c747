import pytest
from hypothesis import given, settings, strategies as st

from nga.algebra import AlgebraSpec, G, H, M, build_algebra
from nga.enveloping import (EnvElement, TensorElement, ad_series_conjugate, commutator, embed,
                            normal_order, tensor, tensor_multiply)
from nga.hopf import classical_coproduct, make_nm_r
from nga.scalars import ScalarSum

TABLE = build_algebra(AlgebraSpec(2, 3))
i = ScalarSum.imag_unit()


def gen(g):
    return EnvElement.generator(TABLE, g)


def test_normal_order_examples():
    assert normal_order((G(1, 1), H), TABLE).render() == "H*G:1:1 - i*G:1:0"
    assert normal_order((H, G(1, 1)), TABLE).render() == "H*G:1:1"
    assert normal_order((G(1, 0), H), TABLE).render() == "H*G:1:0"


def test_normal_order_rejects_foreign_generator():
    with pytest.raises(ValueError):
        normal_order((G(1, 5),), TABLE)


def test_tensor_multiply_examples():
    h1 = TensorElement.from_words(TABLE, [(H,), ()])
    h2 = TensorElement.from_words(TABLE, [(), (H,)])
    assert tensor_multiply(h1, h2) == TensorElement.from_words(TABLE, [(H,), (H,)])
    g1 = TensorElement.from_words(TABLE, [(G(1, 1),), ()])
    want = TensorElement.from_words(TABLE, [(H, G(1, 1)), ()]) \
        - TensorElement.from_words(TABLE, [(G(1, 0),), ()], i)
    assert tensor_multiply(g1, h1) == want
    unit = TensorElement.unit(TABLE, 2)
    assert tensor_multiply(g1, unit) == g1


def test_rank_mismatch():
    with pytest.raises(ValueError):
        tensor_multiply(gen(H), TensorElement.unit(TABLE, 2))


def test_embed_and_tensor():
    r = tensor(gen(H), gen(G(1, 0)))
    assert embed(r, (0, 2), 3) == tensor(gen(H), EnvElement.unit(TABLE), gen(G(1, 0)))


def test_render_and_latex():
    x = normal_order((G(1, 1), H), TABLE)
    assert x.latex() == "H G_{1}^{(1)} - i G_{1}^{(0)}"
    t = TensorElement.from_words(TABLE, [(H,), (M(1, 2),)])
    assert t.render() == "H ⊗ M:1:2"


def test_conjugation_terminates_on_boosts():
    r = make_nm_r(TABLE, 1, 1).expansion
    y = classical_coproduct(gen(G(2, 2)))
    c = ad_series_conjugate(r, y, 4)
    assert c.terminated and c.depth == 0 and c.value == y


def test_conjugation_of_rotation_stops_after_one_commutator():
    r = make_nm_r(TABLE, 1, 1).expansion
    y = classical_coproduct(gen(M(1, 2)))
    c = ad_series_conjugate(r, y, 4)
    assert c.terminated and c.depth == 1
    assert c.value == y + commutator(r, y).scale(i)


def test_conjugation_order_zero():
    r = make_nm_r(TABLE, 0, 1).expansion
    y = classical_coproduct(gen(H))
    assert ad_series_conjugate(r, y, 0).value == y


def test_forward_backward_conjugation():
    r = make_nm_r(TABLE, 1, 2).expansion
    y = classical_coproduct(gen(H))
    fwd = ad_series_conjugate(r, y, 5, max_degree=5).value
    back = ad_series_conjugate(r, fwd, 5, max_degree=5, sign=-1).value
    assert (back - y).truncate(5) == TensorElement(TABLE, 2)


words = st.lists(st.sampled_from(TABLE.generators), max_size=4)


@settings(max_examples=60, deadline=None)
@given(words, words, words)
def test_normal_order_associative(u, v, w):
    a, b, c = (normal_order(tuple(x), TABLE) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)
    assert a * b == normal_order(tuple(u + v), TABLE)


@given(words)
def test_normal_order_fixes_pbw_words(u):
    assert normal_order(tuple(sorted(u)), TABLE).terms == {(tuple(sorted(u)),): ScalarSum.one()}
