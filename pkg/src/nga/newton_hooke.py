"""N = 6 Newton-Hooke enlargement: coefficient functions and transformations.

The functions ``f_n(t)`` multiply ``a_{in}`` in the finite transformation

    x_i -> omega_ij x_j + sum_n a_in f_n(t),    t -> t + t0,

with hyperbolic functions for ``sign = +1`` and trigonometric ones for
``sign = -1``.  They reduce to ``t^n`` as ``tau -> infinity``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import NH_MAX_LEVEL, NH_MINUS, NH_PLUS
from .functions import HYPER, TRIG, FunctionElement, d_dt, tau_split, taylor
from .scalars import ScalarSum


def mode_for(sign):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return HYPER if sign > 0 else TRIG


def sign_for(variant):
    return {NH_PLUS: 1, NH_MINUS: -1}[variant]


def _tau(e):
    return ScalarSum.param("tau", e)


def nh_coefficient(n, sign):
    """The multiplier of ``a_{in}`` for ``n = 0..6``."""
    if not 0 <= n <= NH_MAX_LEVEL:
        raise ValueError(f"Newton-Hooke coefficient functions exist for n = 0..{NH_MAX_LEVEL}")
    mode = mode_for(sign)
    C = FunctionElement.C(mode)
    S = FunctionElement.S(mode)
    t = FunctionElement.t(mode)
    u = t.scale(_tau(-1))
    one = FunctionElement.one(mode)
    if n == 0:
        return C
    if n == 1:
        return S.scale(_tau(1))
    if n == 2:
        return (C - one).scale(_tau(2) * (2 * sign))
    if n == 3:
        return (S - u).scale(_tau(3) * (6 * sign))
    if n == 4:
        return (C - (u ** 2).scale(Fraction(sign, 2)) - one).scale(_tau(4) * 24)
    if n == 5:
        return (S - (u ** 3).scale(Fraction(sign, 6)) - u).scale(_tau(5) * 120)
    return (C.scale(sign) - (u ** 4).scale(Fraction(sign, 24))
            - (u ** 2).scale(Fraction(1, 2)) - one.scale(sign)).scale(_tau(6) * 720)


@dataclass
class NHCoefficients:
    sign: int
    f: tuple = field(default=())

    def __post_init__(self):
        if not self.f:
            self.f = tuple(nh_coefficient(n, self.sign) for n in range(NH_MAX_LEVEL + 1))

    @property
    def mode(self):
        return mode_for(self.sign)

    def recurrence_residuals(self):
        """``f_n' - n f_{n-1}`` for n >= 1 and ``f_0' - sign f_1 / tau^2``."""
        out = {0: d_dt(self.f[0]) - self.f[1].scale(_tau(-2) * self.sign)}
        for n in range(1, len(self.f)):
            out[n] = d_dt(self.f[n]) - self.f[n - 1].scale(n)
        return out


@dataclass
class FlatLimitReport:
    n: int
    sign: int
    order: int
    expansion: FunctionElement
    leading: FunctionElement
    remainder_order: int
    leading_ok: bool
    rest_negative: bool

    @property
    def ok(self):
        return self.leading_ok and self.rest_negative

    def to_json(self):
        return {
            "n": self.n,
            "sign": "+" if self.sign > 0 else "-",
            "order": self.order,
            "expansion": self.expansion.render(),
            "tau0_part": self.leading.render(),
            "remainder": f"O((t/tau)^{self.remainder_order})",
            "tau0_is_t^n": self.leading_ok,
            "other_terms_negative_tau": self.rest_negative,
            "status": "pass" if self.ok else "fail",
        }


def flat_limit_check(n, sign, order):
    """Taylor-expand ``f_n`` in ``t/tau`` and check the ``tau -> infinity`` limit."""
    if order < n:
        raise ValueError("order must be at least n")
    expansion, rem = taylor(nh_coefficient(n, sign), order)
    leading, rest = tau_split(expansion)
    target = FunctionElement.monomial(((), n, 0, 0))
    negative = all(e < 0
                   for c in rest.terms.values()
                   for key, _ in c.items()
                   for name, e in key if name == "tau")
    negative = negative and all(any(name == "tau" for name, _ in key)
                                for c in rest.terms.values() for key, _ in c.items())
    return FlatLimitReport(n, sign, order, expansion, leading, rem,
                           leading == target, negative)


def time_shift(f, t0="t0"):
    """Rewrite ``f(t)`` as a function of ``t`` after ``t -> t + t0``.

    Uses the addition theorems with ``S0 = S(t0/tau)`` and ``C0 = C(t0/tau)``
    kept as formal constants.
    """
    mode = f.mode
    sgn = 1 if mode == HYPER else -1
    t0s = ScalarSum.param(t0) if isinstance(t0, str) else ScalarSum.coerce(t0)
    t = FunctionElement.t(mode)
    shifted_t = t + t0s
    if mode in (HYPER, TRIG):
        S, C = FunctionElement.S(mode), FunctionElement.C(mode)
        S0, C0 = ScalarSum.param("S0"), ScalarSum.param("C0")
        shifted_S = S.scale(C0) + C.scale(S0)
        shifted_C = C.scale(C0) + S.scale(S0 * sgn)
    out = FunctionElement(mode)
    for (xs, a, b, c), coef in f.terms.items():
        term = FunctionElement.monomial((xs, 0, 0, 0), mode, coef)
        term = term * shifted_t ** a
        if b or c:
            term = term * shifted_S ** b * shifted_C ** c
        out = out + term
    return out


def nh_transform(xs, sign, omega=None, a=None, t0=None):
    """Apply the finite N = 6 Newton-Hooke transformation to coordinates.

    ``xs`` are the spatial coordinates as FunctionElements (1-based order),
    ``omega`` maps ``(i, j)`` to coefficients (identity when omitted) and ``a``
    maps ``(i, n)`` to coefficients.  Returns ``(t', [x_1', ...])``.
    """
    mode = mode_for(sign)
    d = len(xs)
    one = ScalarSum.one()
    new = []
    for i in range(1, d + 1):
        acc = FunctionElement(mode)
        for j in range(1, d + 1):
            w = (omega or {}).get((i, j), one if (omega is None and i == j) else 0)
            w = ScalarSum.coerce(w)
            if w:
                acc = acc + xs[j - 1].scale(w)
        for (k, n), coef in (a or {}).items():
            if k == i:
                acc = acc + nh_coefficient(n, sign).scale(ScalarSum.coerce(coef))
        new.append(acc)
    t = FunctionElement.t(mode)
    if t0 is not None:
        t = t + ScalarSum.coerce(t0)
    return t, new
