"""Generators as first-order differential operators on functions f(t, x)."""

from dataclasses import dataclass
from itertools import combinations

from .algebra import GALILEI
from .functions import POLY, FunctionElement, coordinate_monomials, d_dt, d_dx
from .newton_hooke import mode_for, nh_coefficient, sign_for
from .scalars import I, ScalarSum

T = "t"


def mode_of(spec):
    return POLY if spec.variant == GALILEI else mode_for(sign_for(spec.variant))


@dataclass
class DiffOperator:
    """``sum coeff_k * d_k`` where ``d_k`` is ``"t"`` or a spatial index."""

    terms: tuple

    def apply(self, f):
        out = FunctionElement(f.mode)
        for coeff, var in self.terms:
            df = d_dt(f) if var == T else d_dx(var, f)
            if df:
                out = out + coeff * df
        return out

    __call__ = apply


def represent(g, spec):
    """Differential operator for generator ``g``.

    ``M_ij -> i(x_i d_j - x_j d_i)``, ``H -> i d_t``, ``G_i^(n) -> i f_n(t) d_i``
    with ``f_n = t^n`` (Galilei) or the Newton-Hooke coefficient functions.
    """
    if not spec.contains(g):
        raise ValueError(f"{g} is not a generator of {spec}")
    mode = mode_of(spec)
    if g.kind == 0:
        i, j = g.a, g.b
        return DiffOperator(((FunctionElement.x(i, mode).scale(I), j),
                             (FunctionElement.x(j, mode).scale(-I), i)))
    if g.kind == 1:
        return DiffOperator(((FunctionElement.constant(I, mode), T),))
    n, i = g.a, g.b
    if spec.variant == GALILEI:
        coeff = FunctionElement.monomial(((), n, 0, 0), mode, I)
    else:
        coeff = nh_coefficient(n, sign_for(spec.variant)).scale(I)
    return DiffOperator(((coeff, i),))


class _Action:
    """Memoized action of generators on basis monomials."""

    def __init__(self, spec):
        self.spec = spec
        self.mode = mode_of(spec)
        self.ops = {}
        self.cache = {}

    def op(self, g):
        if g not in self.ops:
            self.ops[g] = represent(g, self.spec)
        return self.ops[g]

    def on_key(self, g, key):
        k = (g, key)
        if k not in self.cache:
            f = FunctionElement(self.mode, {key: ScalarSum.one()})
            self.cache[k] = self.op(g).apply(f)
        return self.cache[k]

    def apply(self, g, f):
        out = {}
        for key, c in f.terms.items():
            for k2, c2 in self.on_key(g, key).terms.items():
                v = out.get(k2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        return FunctionElement(self.mode, out)


def rep_consistency_check(table, max_degree, basis=None):
    """Compare ``[rho X, rho Y] f`` with ``rho([X, Y]) f`` on basis monomials.

    Returns a list of ``(X, Y, f, residual)``; empty means the map is a Lie
    homomorphism on the tested functions.
    """
    spec = table.spec
    act = _Action(spec)
    if basis is None:
        basis = coordinate_monomials(spec.d, max_degree, act.mode,
                                     with_transcendental=spec.variant != GALILEI)
    failures = []
    for x, y in combinations(table.generators, 2):
        br = table.bracket(x, y)
        for f in basis:
            lhs = act.apply(x, act.apply(y, f)) - act.apply(y, act.apply(x, f))
            rhs = FunctionElement(act.mode)
            for g, c in br.items():
                rhs = rhs + act.apply(g, f).scale(c)
            res = lhs - rhs
            if res:
                failures.append((x, y, f, res))
    return failures


def apply_word(word, f, spec):
    """Act with a generator word (rightmost letter first)."""
    act = _Action(spec)
    for g in reversed(word):
        f = act.apply(g, f)
    return f



