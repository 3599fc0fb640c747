"""Functions f(t, x) on which the generators act.

A monomial is ``x^beta * t^a * S^b * C^c`` with ``S``/``C`` standing for
``sinh/cosh(t/tau)`` (mode ``hyper``) or ``sin/cos(t/tau)`` (mode ``trig``);
``c <= 1`` always, since ``C^2`` is rewritten as ``1 + S^2`` or ``1 - S^2``.
In mode ``poly`` only powers of ``t`` occur.  Coefficients are
:class:`~nga.scalars.ScalarSum`, so powers of ``tau`` live there.
"""

from fractions import Fraction
from math import factorial

from .scalars import ScalarSum, latex as latex_scalar, latex_param, needs_parens, render as render_scalar
from .scalars import to_json as scalar_json

POLY = "poly"
HYPER = "hyper"
TRIG = "trig"
MODES = (POLY, HYPER, TRIG)

ONE = ScalarSum.one()
_TAU_INV = ScalarSum.param("tau", -1)


def mode_sign(mode):
    """+1 for hyperbolic (C^2 = 1 + S^2), -1 for trigonometric."""
    return {HYPER: 1, TRIG: -1}.get(mode, 0)


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


def _xmul(a, b):
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for i, e in b:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def _reduce(key, c, mode, out):
    """Add ``c * key`` to ``out``, eliminating C^2."""
    xs, a, b, cc = key
    if cc <= 1:
        _acc(out, key, c)
        return
    sgn = mode_sign(mode)
    # C^cc = C^(cc-2) * (1 + sgn S^2)
    _reduce((xs, a, b, cc - 2), c, mode, out)
    _reduce((xs, a, b + 2, cc - 2), c * sgn, mode, out)


class FunctionElement:
    """Canonical linear combination of monomials ``(xs, t, s, c)``."""

    __slots__ = ("mode", "terms")

    def __init__(self, mode=POLY, terms=None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.terms = {} if terms is None else terms

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, mode=POLY):
        c = ScalarSum.coerce(c)
        return cls(mode, {((), 0, 0, 0): c} if c else {})

    @classmethod
    def one(cls, mode=POLY):
        return cls.constant(ONE, mode)

    @classmethod
    def x(cls, i, mode=POLY):
        return cls(mode, {(((i, 1),), 0, 0, 0): ONE})

    @classmethod
    def t(cls, mode=POLY):
        return cls(mode, {((), 1, 0, 0): ONE})

    @classmethod
    def S(cls, mode):
        if mode == POLY:
            raise ValueError("S only exists in hyper/trig modes")
        return cls(mode, {((), 0, 1, 0): ONE})

    @classmethod
    def C(cls, mode):
        if mode == POLY:
            raise ValueError("C only exists in hyper/trig modes")
        return cls(mode, {((), 0, 0, 1): ONE})

    @classmethod
    def monomial(cls, key, mode=POLY, coeff=ONE):
        xs, a, b, c = key
        xs = tuple(sorted((i, e) for i, e in (xs.items() if isinstance(xs, dict) else xs) if e))
        if mode == POLY and (b or c):
            raise ValueError("S/C atoms are not allowed in poly mode")
        out = {}
        _reduce((xs, a, b, c), ScalarSum.coerce(coeff), mode, out)
        return cls(mode, out)

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other):
        if isinstance(other, FunctionElement):
            if other.mode != self.mode:
                raise ValueError(f"mode mismatch: {self.mode} vs {other.mode}")
            return other
        return FunctionElement.constant(ScalarSum.coerce(other), self.mode)

    def __add__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return FunctionElement(self.mode, t)

    __radd__ = __add__

    def __neg__(self):
        return FunctionElement(self.mode, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = ScalarSum.coerce(c)
        t = {}
        for k, v in self.terms.items():
            _acc(t, k, v * c)
        return FunctionElement(self.mode, t)

    def __mul__(self, other):
        if not isinstance(other, FunctionElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exp):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        out = FunctionElement.one(self.mode)
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FunctionElement):
            return self.mode == other.mode and self.terms == other.terms
        try:
            return self.terms == FunctionElement.constant(other, self.mode).terms
        except TypeError:
            return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def map_coeffs(self, fn):
        t = {}
        for k, c in self.terms.items():
            _acc(t, k, fn(c))
        return FunctionElement(self.mode, t)

    def substitute(self, values):
        return self.map_coeffs(lambda c: c.substitute(values))

    # -- structure ----------------------------------------------------------

    def x_degree(self):
        return max((sum(e for _, e in k[0]) for k in self.terms), default=-1)

    def t_degree(self):
        return max((k[1] for k in self.terms), default=-1)

    def has_transcendental(self):
        return any(k[2] or k[3] for k in self.terms)

    def coefficient(self, key):
        return self.terms.get(key, ScalarSum.zero())

    # -- rendering ----------------------------------------------------------

    def _sorted(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (-(sum(e for _, e in kv[0][0]) + kv[0][1] + kv[0][2] + kv[0][3]), kv[0]))

    def render(self):
        return _render(self, render_scalar, _mono_text, "*")

    def latex(self):
        return _render(self, latex_scalar, lambda k: _mono_latex(k, self.mode), " ")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FunctionElement({self.mode!r}, {self.render()!r})"

    def to_json(self):
        out = []
        for (xs, a, b, c), coef in self._sorted():
            out.append({"x": {str(i): e for i, e in xs}, "t": a, "S": b, "C": c,
                        "coeff": scalar_json(coef)})
        return out


def _mono_text(key):
    xs, a, b, c = key
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in xs]
    for name, e in (("t", a), ("S", b), ("C", c)):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _mono_latex(key, mode):
    xs, a, b, c = key
    arg = f"\\left(\\frac{{t}}{{{latex_param('tau')}}}\\right)"
    s_name, c_name = ("\\sinh", "\\cosh") if mode == HYPER else ("\\sin", "\\cos")
    parts = [f"x_{{{i}}}" if e == 1 else f"x_{{{i}}}^{{{e}}}" for i, e in xs]
    if a:
        parts.append("t" if a == 1 else f"t^{{{a}}}")
    if b:
        parts.append(f"{s_name}{arg}" if b == 1 else f"{s_name}^{{{b}}}{arg}")
    if c:
        parts.append(f"{c_name}{arg}")
    return " ".join(parts)


def _render(f, scalar_fn, mono_fn, star):
    if not f.terms:
        return "0"
    out = []
    for key, c in f._sorted():
        mono = mono_fn(key)
        cs = scalar_fn(c)
        if not mono:
            text = cs
        elif cs == "1":
            text = mono
        elif cs == "-1":
            text = "-" + mono
        elif needs_parens(c):
            text = f"({cs}){star}{mono}"
        else:
            text = f"{cs}{star}{mono}"
        if not out:
            out.append(text)
        elif text.startswith("-"):
            out.append(f" - {text[1:]}")
        else:
            out.append(f" + {text}")
    return "".join(out)


def multiply(f, g):
    """Pointwise product in canonical form."""
    if f.mode != g.mode:
        raise ValueError(f"mode mismatch: {f.mode} vs {g.mode}")
    out = {}
    for (xa, ta, sa, ca), c1 in f.terms.items():
        for (xb, tb, sb, cb), c2 in g.terms.items():
            _reduce((_xmul(xa, xb), ta + tb, sa + sb, ca + cb), c1 * c2, f.mode, out)
    return FunctionElement(f.mode, out)


def d_dt(f):
    """Time derivative: ``S' = C/tau``, ``C' = sign * S/tau``."""
    sgn = mode_sign(f.mode)
    out = {}
    for (xs, a, b, c), coef in f.terms.items():
        if a:
            _reduce((xs, a - 1, b, c), coef * a, f.mode, out)
        if b:
            _reduce((xs, a, b - 1, c + 1), coef * _TAU_INV * b, f.mode, out)
        if c:
            _reduce((xs, a, b + 1, c - 1), coef * _TAU_INV * (c * sgn), f.mode, out)
    return FunctionElement(f.mode, out)


def d_dx(i, f):
    out = {}
    for (xs, a, b, c), coef in f.terms.items():
        e = dict(xs).get(i, 0)
        if not e:
            continue
        nxs = tuple((j, k - 1 if j == i else k) for j, k in xs if not (j == i and k == 1))
        _acc(out, (nxs, a, b, c), coef * e)
    return FunctionElement(f.mode, out)


def _series(kind, mode, order):
    """Taylor coefficients of S or C in u = t/tau up to ``u^order``."""
    sgn = mode_sign(mode)
    out = {}
    for k in range(order + 1):
        if kind == "S" and k % 2 == 1:
            s = sgn ** ((k - 1) // 2)
        elif kind == "C" and k % 2 == 0:
            s = sgn ** (k // 2)
        else:
            continue
        out[k] = ScalarSum.number(Fraction(s, factorial(k)))
    return out


def _poly_mul(p, q, order):
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            if i + j <= order:
                v = out.get(i + j)
                out[i + j] = a * b if v is None else v + a * b
    return {k: v for k, v in out.items() if v}


def taylor(f, order):
    """Expand S and C in powers of ``u = t/tau`` through ``u^order``.

    Returns ``(poly_element, remainder_order)``: the result is exact up to
    ``O(u^(order + 1))`` in each S/C factor.
    """
    if f.mode == POLY:
        return FunctionElement(POLY, dict(f.terms)), order + 1
    s_ser = _series("S", f.mode, order)
    c_ser = _series("C", f.mode, order)
    out = {}
    cache = {}
    for (xs, a, b, c), coef in f.terms.items():
        if (b, c) not in cache:
            p = {0: ONE}
            for _ in range(b):
                p = _poly_mul(p, s_ser, order)
            for _ in range(c):
                p = _poly_mul(p, c_ser, order)
            cache[(b, c)] = p
        for k, v in cache[(b, c)].items():
            _acc(out, (xs, a + k, 0, 0), coef * v * ScalarSum.param("tau", -k))
    return FunctionElement(POLY, out), order + 1


def tau_split(f):
    """Split into (tau^0 part, part with other tau powers)."""
    zero, rest = {}, {}
    for k, c in f.terms.items():
        z = c.part(lambda key: all(n != "tau" for n, _ in key))
        r = c - z
        if z:
            zero[k] = z
        if r:
            rest[k] = r
    return FunctionElement(f.mode, zero), FunctionElement(f.mode, rest)


def coordinate_monomials(d, max_degree, mode=POLY, with_transcendental=False):
    """All monomials in t (and S, C) and x_1..x_d of total degree <= max_degree."""
    variables = ["t"] + [f"x{i}" for i in range(1, d + 1)]
    if with_transcendental:
        variables += ["S", "C"]
    out = []

    def rec(pos, remaining, acc):
        if pos == len(variables):
            out.append(dict(acc))
            return
        name = variables[pos]
        top = min(remaining, 1) if name == "C" else remaining
        for e in range(top + 1):
            acc[name] = e
            rec(pos + 1, remaining - e, acc)
        del acc[name]

    rec(0, max_degree, {})
    funcs = []
    for exps in out:
        xs = tuple((i, exps[f"x{i}"]) for i in range(1, d + 1) if exps[f"x{i}"])
        key = (xs, exps["t"], exps.get("S", 0), exps.get("C", 0))
        funcs.append(FunctionElement(mode, {key: ONE}))
    return funcs
