"""Exact coefficient ring.

A coefficient is a finite sum of terms ``(re + i*im) * p1^e1 * p2^e2 ...``
with ``re``/``im`` arbitrary-precision rationals and ``p_k`` commuting formal
parameters.  Only ``tau`` may carry a negative exponent.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

LAURENT_PARAMS = frozenset({"tau"})

# coefficients are stored as gmpy2 rationals; the public Scalar uses Fraction
_ZERO = mpq(0)
_ONE = mpq(1)


def _check_params(params):
    for name, exp in params:
        if exp < 0 and name not in LAURENT_PARAMS:
            raise ValueError(f"negative exponent for polynomial parameter {name!r}")


@lru_cache(maxsize=None)
def _merge(k1, k2):
    if not k1:
        return k2
    if not k2:
        return k1
    acc = dict(k1)
    for name, exp in k2:
        e = acc.get(name, 0) + exp
        if e:
            acc[name] = e
        else:
            del acc[name]
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class Scalar:
    """A single Gaussian-rational coefficient times a parameter monomial."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))
        if isinstance(self.params, dict):
            params = tuple(sorted((k, v) for k, v in self.params.items() if v))
        else:
            params = tuple(sorted((k, v) for k, v in self.params if v))
        if not self.re and not self.im:
            params = ()
        _check_params(params)
        object.__setattr__(self, "params", params)

    def is_zero(self):
        return not self.re and not self.im


class ScalarSum:
    """Canonical sum of :class:`Scalar` terms with pairwise-distinct monomials.

    Internally a dict ``{param_key: (re, im)}``; instances are treated as
    immutable once built.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for item in terms:
                if isinstance(item, Scalar):
                    key, re, im = item.params, item.re, item.im
                else:
                    key, (re, im) = item
                    _check_params(key)
                re, im = mpq(re), mpq(im)
                if not re and not im:
                    continue
                if key in t:
                    a, b = t[key]
                    re, im = a + re, b + im
                    if not re and not im:
                        del t[key]
                        continue
                t[key] = (re, im)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(): (_ONE, _ZERO)})

    @classmethod
    def imag_unit(cls):
        return cls._raw({(): (_ZERO, _ONE)})

    @classmethod
    def number(cls, re, im=0):
        re, im = mpq(re), mpq(im)
        if not re and not im:
            return cls.zero()
        return cls._raw({(): (re, im)})

    @classmethod
    def param(cls, name, exp=1):
        if not exp:
            return cls.one()
        key = ((name, exp),)
        _check_params(key)
        return cls._raw({key: (_ONE, _ZERO)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, ScalarSum):
            return value
        if isinstance(value, Scalar):
            return cls([value])
        if isinstance(value, (int, Fraction)) or type(value) is type(_ONE):
            return cls.number(value)
        if isinstance(value, complex):
            re, im = Fraction(value.real), Fraction(value.imag)
            return cls.number(re, im)
        raise TypeError(f"cannot coerce {type(value).__name__} to ScalarSum")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return [Scalar(Fraction(int(re.numerator), int(re.denominator)),
                       Fraction(int(im.numerator), int(im.denominator)), key)
                for key, (re, im) in sorted(self._t.items())]

    def items(self):
        return self._t.items()

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_number(self):
        """True when no formal parameters occur."""
        return all(not key for key in self._t)

    def constant(self):
        """Gaussian-rational part free of parameters, as ``(re, im)``."""
        return self._t.get((), (_ZERO, _ZERO))

    def params(self):
        return sorted({name for key in self._t for name, _ in key})

    def degree(self, exclude=LAURENT_PARAMS):
        """Largest total exponent of non-excluded parameters (-1 for zero)."""
        if not self._t:
            return -1
        return max(sum(e for n, e in key if n not in exclude) for key in self._t)

    def low_degree(self, exclude=LAURENT_PARAMS):
        """Smallest total exponent of non-excluded parameters (-1 for zero)."""
        if not self._t:
            return -1
        return min(sum(e for n, e in key if n not in exclude) for key in self._t)

    def truncate(self, max_degree, exclude=LAURENT_PARAMS):
        keep = {k: v for k, v in self._t.items()
                if sum(e for n, e in k if n not in exclude) <= max_degree}
        if len(keep) == len(self._t):
            return self
        return ScalarSum._raw(keep)

    def part(self, pred):
        """Sub-sum of the terms whose parameter key satisfies ``pred``."""
        return ScalarSum._raw({k: v for k, v in self._t.items() if pred(k)})

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ScalarSum):
            try:
                other = ScalarSum.coerce(other)
            except TypeError:
                return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self):
        return ScalarSum._raw({k: (-a, -b) for k, (a, b) in self._t.items()})

    def __add__(self, other):
        if not isinstance(other, ScalarSum):
            try:
                other = ScalarSum.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for k, (c, d) in other._t.items():
            if k in t:
                a, b = t[k]
                re, im = a + c, b + d
                if re or im:
                    t[k] = (re, im)
                else:
                    del t[k]
            else:
                t[k] = (c, d)
        return ScalarSum._raw(t)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ScalarSum):
            try:
                other = ScalarSum.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ScalarSum.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ScalarSum):
            if isinstance(other, (int, Fraction, Scalar, complex)) or type(other) is type(_ONE):
                other = ScalarSum.coerce(other)
            else:
                return NotImplemented
        if not self._t or not other._t:
            return ScalarSum._raw({})
        t = {}
        for k1, (a, b) in self._t.items():
            for k2, (c, d) in other._t.items():
                k = _merge(k1, k2)
                if not b:
                    re, im = a * c, a * d
                elif not a:
                    re, im = -b * d, b * c
                else:
                    re = a * c - b * d
                    im = a * d + b * c
                if k in t:
                    x, y = t[k]
                    re, im = re + x, im + y
                    if not re and not im:
                        del t[k]
                        continue
                elif not re and not im:
                    continue
                t[k] = (re, im)
        return ScalarSum._raw(t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, re, im=0):
        """Multiply by the Gaussian rational ``re + i*im``."""
        re, im = mpq(re), mpq(im)
        out = {}
        for k, (a, b) in self._t.items():
            x, y = a * re - b * im, a * im + b * re
            if x or y:
                out[k] = (x, y)
        return ScalarSum._raw(out)

    def inverse(self):
        """Inverse of a single-term sum (monomials in ``tau`` only may be inverted)."""
        if len(self._t) != 1:
            raise ZeroDivisionError("only single-term scalars are invertible")
        (key, (a, b)), = self._t.items()
        norm = a * a + b * b
        return ScalarSum([(tuple((n, -e) for n, e in key), (a / norm, -b / norm))])

    def __pow__(self, exp):
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            return self.inverse() ** (-exp)
        out = ScalarSum.one()
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def conjugate(self):
        return ScalarSum._raw({k: (a, -b) for k, (a, b) in self._t.items()})

    def substitute(self, values):
        """Replace parameters by exact values (``{name: Fraction | ScalarSum}``)."""
        if not values:
            return self
        out = ScalarSum.zero()
        for key, (a, b) in self._t.items():
            term = ScalarSum._raw({(): (a, b)})
            rest = []
            for name, exp in key:
                if name in values:
                    term = term * ScalarSum.coerce(values[name]) ** exp
                else:
                    rest.append((name, exp))
            if rest:
                term = term * ScalarSum._raw({tuple(rest): (_ONE, _ZERO)})
            out = out + term
        return out

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        return f"ScalarSum({render(self)!r})"

    def __str__(self):
        return render(self)


I = ScalarSum.imag_unit()
ONE = ScalarSum.one()
ZERO = ScalarSum.zero()


def _sort_key(item):
    key, _ = item
    return (-sum(e for _, e in key), key)


def _rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q.numerator}/{q.denominator})"


def _gauss(re, im):
    """Render ``re + i*im`` as (sign, body); body is '' for unit magnitude."""
    if not im:
        sign = "-" if re < 0 else "+"
        q = abs(re)
        return sign, ("" if q == 1 else _rational(q))
    if not re:
        sign = "-" if im < 0 else "+"
        q = abs(im)
        return sign, ("i" if q == 1 else f"{_rational(q)}*i")
    im_part = "i" if abs(im) == 1 else f"{_rational(abs(im))}*i"
    op = "-" if im < 0 else "+"
    return "+", f"({_rational(re).strip('()')} {op} {im_part})"


def _monomial(key):
    parts = []
    for name, exp in key:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def render_term(key, re, im):
    """Render one term as (sign, body) with body never starting with '-'."""
    sign, num = _gauss(re, im)
    mono = _monomial(key)
    if mono and num:
        return sign, f"{num}*{mono}"
    if mono:
        return sign, mono
    return sign, (num or "1")


def render(s):
    """Canonical text form, e.g. ``(3/2)*i*alpha^2*tau^-1``."""
    if not s._t:
        return "0"
    out = []
    for key, (re, im) in sorted(s._t.items(), key=_sort_key):
        sign, body = render_term(key, re, im)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def needs_parens(s):
    """Whether ``s`` must be bracketed when used as a multiplicative factor."""
    if len(s._t) != 1:
        return True
    (_, (re, im)), = s._t.items()
    return bool(re and im)


# -- LaTeX -------------------------------------------------------------------

_GREEK = {"alpha", "beta", "gamma", "delta", "theta", "tau", "omega", "kappa",
          "lambda", "mu", "nu", "sigma", "phi", "psi", "xi", "eta", "zeta", "rho"}


def latex_param(name):
    head, *idx = name.split("_")
    base = f"\\{head}" if head in _GREEK else head
    if not idx:
        return base
    if head == "alpha":
        return f"{base}^{{{''.join(idx)}}}"
    return f"{base}_{{{''.join(idx)}}}"


def _latex_power(name, exp):
    base = latex_param(name)
    if exp == 1:
        return base
    if "^" in base:
        base = f"{{{base}}}"
    return f"{base}^{{{exp}}}"


def _latex_rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"\\frac{{{q.numerator}}}{{{q.denominator}}}"


def latex(s):
    if not s._t:
        return "0"
    out = []
    for key, (re, im) in sorted(s._t.items(), key=_sort_key):
        if re and im:
            op = "-" if im < 0 else "+"
            im_part = "i" if abs(im) == 1 else f"{_latex_rational(abs(im))} i"
            num = f"\\left({_latex_rational(re)} {op} {im_part}\\right)"
            sign = "+"
        else:
            q = re if re else im
            sign = "-" if q < 0 else "+"
            num = "" if abs(q) == 1 else _latex_rational(abs(q))
            if im:
                num = f"{num} i".strip()
        mono = " ".join(_latex_power(n, e) for n, e in key)
        body = " ".join(p for p in (num, mono) if p) or "1"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def to_json(s):
    """List of ``{"re": "p/q", "im": "p/q", "params": {...}}`` dicts."""
    return [{"re": str(re), "im": str(im), "params": dict(key)}
            for key, (re, im) in sorted(s._t.items(), key=_sort_key)]
