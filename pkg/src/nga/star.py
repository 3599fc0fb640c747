"""Twisted star products and the quantum space-time commutator tables."""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import GALILEI
from .diffrep import _Action, mode_of
from .functions import HYPER, TRIG, FunctionElement
from .scalars import I, ScalarSum

ONE = ScalarSum.one()


def _acc(t, key, c):
    v = t.get(key)
    if v is not None:
        c = v + c
        if not c:
            del t[key]
            return
    elif not c:
        return
    t[key] = c


def _apply_slot(act, g, pair_terms, slot):
    out = {}
    for key, c in pair_terms.items():
        image = act.on_key(g, key[slot])
        for k2, c2 in image.terms.items():
            new = (k2, key[1]) if slot == 0 else (key[0], k2)
            _acc(out, new, c * c2)
    return out


def _x_degree(f):
    return max(f.x_degree(), 0)


class DegreeBoundError(AssertionError):
    pass


def star_product(f, g, twist, spec=None):
    """``f * g = m(F^-1 |> f ⊗ g)`` with ``F^-1 = exp(-i r)``.

    The carriers commute, so ``exp(-i r)`` is a product of exponentials of
    single ``coeff * A ⊗ B`` terms, each of which terminates on polynomial
    inputs because one of ``A``, ``B`` is a G generator.
    """
    spec = spec or twist.table.spec
    mode = mode_of(spec)
    if f.mode != mode or g.mode != mode:
        raise ValueError(f"functions must be in mode {mode!r} for variant {spec.variant!r}")
    act = _Action(spec)
    bound = _x_degree(f) + _x_degree(g)
    pair = {}
    for kf, cf in f.terms.items():
        for kg, cg in g.terms.items():
            _acc(pair, (kf, kg), cf * cg)
    minus_i = -I
    for coeff, a, b in twist.r.carriers:
        c = minus_i * coeff
        total = dict(pair)
        current = pair
        steps = 0
        for k in range(1, bound + 2):
            current = _apply_slot(act, b, _apply_slot(act, a, current, 0), 1)
            if not current:
                break
            steps = k
            scale = c * Fraction(1, k)
            current = {key: v * scale for key, v in current.items()}
            for key, v in current.items():
                _acc(total, key, v)
        if steps > bound:
            raise DegreeBoundError(f"twist series did not terminate within {bound} steps")
        pair = total
    out = FunctionElement(mode)
    for (kf, kg), c in pair.items():
        out = out + FunctionElement(mode, {kf: c}) * FunctionElement(mode, {kg: ONE})
    return out


def star_commutator(f, g, twist, spec=None):
    return star_product(f, g, twist, spec) - star_product(g, f, twist, spec)


# -- closed forms ------------------------------------------------------------

def _delta(a, b):
    return 1 if a == b else 0


def _time_power(n, mode):
    return FunctionElement.monomial(((), n, 0, 0), mode)


def nm_closed_form(r, a, b, time_factor):
    """``i alpha^ij T(t) (delta_ai delta_bj - delta_aj delta_bi)`` summed over i, j."""
    mode = time_factor.mode
    out = FunctionElement(mode)
    d = len(r.alpha)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            w = _delta(a, i) * _delta(b, j) - _delta(a, j) * _delta(b, i)
            if w:
                out = out + time_factor.scale(I * r.alpha[i - 1][j - 1] * w)
    return out


def single_closed_form(r, a, b, time_factor):
    """``2 i alpha T(t) [d_ia (x_k d_bl - x_l d_bk) - d_ib (x_k d_al - x_l d_ak)]``."""
    mode = time_factor.mode
    i, k, l = r.i, r.k, r.l
    xk, xl = FunctionElement.x(k, mode), FunctionElement.x(l, mode)
    bracket = (xk.scale(_delta(b, l)) - xl.scale(_delta(b, k))).scale(_delta(i, a)) \
        - (xk.scale(_delta(a, l)) - xl.scale(_delta(a, k))).scale(_delta(i, b))
    return (bracket * time_factor).scale(I * r.alpha * 2)


def nh_66_factor(sign):
    """``518400 tau^12 (±C ∓ t^4/24tau^4 - t^2/2tau^2 ∓ 1)^2`` built from atoms."""
    mode = HYPER if sign > 0 else TRIG
    C = FunctionElement.C(mode)
    t = FunctionElement.t(mode)
    tau = lambda e: ScalarSum.param("tau", e)
    inner = C.scale(sign) - (t ** 4).scale(tau(-4) * Fraction(sign, 24)) \
        - (t ** 2).scale(tau(-2) * Fraction(1, 2)) - FunctionElement.one(mode).scale(sign)
    return (inner * inner).scale(tau(12) * 518400)


def _time_factor(r, spec):
    from .newton_hooke import nh_coefficient, sign_for
    mode = mode_of(spec)
    if r.kind == "nm":
        if spec.variant == GALILEI:
            return _time_power(r.n + r.m, mode), "galilei-nm"
        sign = sign_for(spec.variant)
        if r.n == r.m == 6:
            return nh_66_factor(sign), "newton-hooke-66"
        return nh_coefficient(r.n, sign) * nh_coefficient(r.m, sign), "newton-hooke-nm"
    if spec.variant == GALILEI:
        return _time_power(r.n, mode), "galilei-single"
    return nh_coefficient(r.n, sign_for(spec.variant)), "newton-hooke-single"


FORMULAS = {
    "galilei-nm": "[x_a, x_b] = i alpha^ij t^(n+m) (d_ai d_bj - d_aj d_bi)",
    "galilei-single": "[x_a, x_b] = 2i alpha t^n [d_ia (x_k d_bl - x_l d_bk) - d_ib (x_k d_al - x_l d_ak)]",
    "newton-hooke-66": "[x_a, x_b] = i alpha^ij 518400 tau^12 (±C ∓ t^4/24tau^4 - t^2/2tau^2 ∓ 1)^2 (d_ai d_bj - d_aj d_bi)",
    "newton-hooke-nm": "[x_a, x_b] = i alpha^ij f_n(t) f_m(t) (d_ai d_bj - d_aj d_bi)",
    "newton-hooke-single": "[x_a, x_b] = 2i alpha f_n(t) [d_ia (x_k d_bl - x_l d_bk) - d_ib (x_k d_al - x_l d_ak)]",
    "time": "[t, x_a] = 0",
}


@dataclass
class TableEntry:
    pair: tuple
    entry: FunctionElement
    paper_form: FunctionElement
    formula: str

    @property
    def matches(self):
        return self.entry == self.paper_form


@dataclass
class SpacetimeTable:
    twist_label: str
    spec: object
    coordinates: list
    entries: list = field(default_factory=list)

    @property
    def matches(self):
        return all(e.matches for e in self.entries)

    def get(self, a, b):
        for e in self.entries:
            if e.pair == (a, b):
                return e.entry
            if e.pair == (b, a):
                return -e.entry
        if a == b:
            return FunctionElement(mode_of(self.spec))
        raise KeyError((a, b))

    def substitute(self, values):
        return SpacetimeTable(self.twist_label, self.spec, self.coordinates,
                              [TableEntry(e.pair, e.entry.substitute(values),
                                          e.paper_form.substitute(values), e.formula)
                               for e in self.entries])


def spacetime_table(twist, spec=None):
    """All star commutators among ``t, x_1..x_d`` with closed-form verdicts."""
    spec = spec or twist.table.spec
    mode = mode_of(spec)
    r = twist.r
    coords = [("t", FunctionElement.t(mode))] + \
        [(f"x{i}", FunctionElement.x(i, mode)) for i in range(1, spec.d + 1)]
    table = SpacetimeTable(twist.label(), spec, [c for c, _ in coords])
    factor, kind = _time_factor(r, spec)
    zero = FunctionElement(mode)
    for p in range(len(coords)):
        for q in range(p + 1, len(coords)):
            (na, fa), (nb, fb) = coords[p], coords[q]
            entry = star_commutator(fa, fb, twist, spec)
            if na == "t":
                closed, formula = zero, FORMULAS["time"]
            else:
                a, b = p, q
                if r.kind == "nm":
                    closed = nm_closed_form(r, a, b, factor)
                else:
                    closed = single_closed_form(r, a, b, factor)
                formula = FORMULAS[kind]
            table.entries.append(TableEntry((na, nb), entry, closed, formula))
    return table

