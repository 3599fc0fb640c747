from fractions import Fraction

from hypothesis import strategies as st

from nga.scalars import ScalarSum

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def scalar_terms(draw):
    re, im = draw(rationals), draw(rationals)
    out = ScalarSum.number(re, im)
    for name in ("alpha", "beta"):
        e = draw(st.integers(0, 2))
        if e:
            out = out * ScalarSum.param(name, e)
    e = draw(st.integers(-2, 2))
    if e:
        out = out * ScalarSum.param("tau", e)
    return out


@st.composite
def scalar_sums(draw, max_terms=5):
    out = ScalarSum.zero()
    for term in draw(st.lists(scalar_terms(), max_size=max_terms)):
        out = out + term
    return out
