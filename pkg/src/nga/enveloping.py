"""Universal enveloping algebra in PBW form, and its tensor powers.

A word is a tuple of :class:`~nga.algebra.Generator`; a PBW word is weakly
increasing.  Elements are sparse dicts from slot-tuples of PBW words to
:class:`~nga.scalars.ScalarSum` coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction

from .scalars import ScalarSum, needs_parens, render as render_scalar, latex as latex_scalar

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


def ordered(table, word):
    """Normal-ordered expansion of ``word`` as a raw dict ``{pbw_word: ScalarSum}``.

    Uses ``xy = yx + [x, y]`` on the leftmost descent; memoized per table.
    """
    cache = table.word_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    p = -1
    for k in range(len(word) - 1):
        if word[k] > word[k + 1]:
            p = k
            break
    if p < 0:
        res = {word: ONE}
    else:
        x, y = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2:]
        res = dict(ordered(table, head + (y, x) + tail))
        for g, c in table.bracket(x, y).items():
            for w, cc in ordered(table, head + (g,) + tail).items():
                _acc(res, w, c * cc)
    cache[word] = res
    return res


class TensorElement:
    """Linear combination of ``rank``-tuples of PBW words."""

    __slots__ = ("table", "rank", "terms")

    def __init__(self, table, rank, terms=None):
        self.table = table
        self.rank = rank
        self.terms = {} if terms is None else terms

    # -- construction -------------------------------------------------------

    @classmethod
    def unit(cls, table, rank):
        return cls(table, rank, {((),) * rank: ONE})

    @classmethod
    def from_words(cls, table, words, coeff=ONE):
        """``coeff * w1 ⊗ w2 ⊗ ...`` with every slot normal-ordered."""
        terms = {(): ScalarSum.coerce(coeff)}
        for w in words:
            nxt = {}
            for key, c in terms.items():
                for pw, cc in ordered(table, tuple(w)).items():
                    _acc(nxt, key + (pw,), c * cc)
            terms = nxt
        return cls(table, len(words), terms)

    def _new(self, terms):
        return type(self)(self.table, self.rank, terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected a tensor element, got {type(other).__name__}")
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return self._new(t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = ScalarSum.coerce(c)
        if not c:
            return self._new({})
        t = {}
        for k, v in self.terms.items():
            _acc(t, k, v * c)
        return self._new(t)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exp):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        out = self.unit(self.table, self.rank) if self.rank != 1 else EnvElement.unit(self.table)
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        """Largest deformation-parameter degree among the coefficients."""
        return max((c.degree() for c in self.terms.values()), default=-1)

    def low_degree(self):
        return min((c.low_degree() for c in self.terms.values()), default=-1)

    def truncate(self, max_degree):
        t = {}
        for k, c in self.terms.items():
            c = c.truncate(max_degree)
            if c:
                t[k] = c
        return self._new(t)

    def map_coeffs(self, fn):
        t = {}
        for k, c in self.terms.items():
            _acc(t, k, fn(c))
        return self._new(t)

    def substitute(self, values):
        return self.map_coeffs(lambda c: c.substitute(values))

    # -- rendering ----------------------------------------------------------

    def _sorted(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (-sum(len(w) for w in kv[0]), kv[0]))

    def _render_key(self, key, sep, gen_str, unit):
        slots = []
        for w in key:
            slots.append(sep[1].join(gen_str(g) for g in w) if w else unit)
        return sep[0].join(slots)

    def _render(self, scalar_fn, sep, gen_str, unit):
        if not self.terms:
            return "0"
        out = []
        for key, c in self._sorted():
            body = self._render_key(key, sep, gen_str, unit)
            all_unit = all(not w for w in key)
            cs = scalar_fn(c)
            if all_unit and self.rank == 1:
                text = cs
            elif cs == "1":
                text = body
            elif cs == "-1":
                text = "-" + body
            elif needs_parens(c):
                text = f"({cs}){sep[2]}{body}"
            else:
                text = f"{cs}{sep[2]}{body}"
            if not out:
                out.append(text)
            elif text.startswith("-"):
                out.append(f" - {text[1:]}")
            else:
                out.append(f" + {text}")
        return "".join(out)

    def render(self):
        return self._render(render_scalar, (" ⊗ ", "*", "*"), str, "1")

    def latex(self):
        return self._render(latex_scalar, (" \\otimes ", " ", " "),
                            lambda g: g.latex(), "1")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"{type(self).__name__}({self.render()!r})"


class EnvElement(TensorElement):
    """Element of U: a rank-1 tensor element keyed by ``(word,)``."""

    __slots__ = ()

    def __init__(self, table, rank=1, terms=None):
        if rank != 1:
            raise ValueError("EnvElement has rank 1")
        super().__init__(table, 1, terms)

    @classmethod
    def unit(cls, table, rank=1):
        return cls(table, 1, {((),): ONE})

    @classmethod
    def generator(cls, table, g, coeff=ONE):
        if g not in table:
            raise ValueError(f"{g} is not a generator of this algebra")
        return cls(table, 1, {((g,),): ScalarSum.coerce(coeff)})

    @classmethod
    def scalar(cls, table, c):
        c = ScalarSum.coerce(c)
        return cls(table, 1, {((),): c} if c else {})

    def words(self):
        return {k[0]: c for k, c in self.terms.items()}


def normal_order(word, table):
    """PBW normal form of a generator word as an :class:`EnvElement`."""
    for g in word:
        if g not in table:
            raise ValueError(f"{g} is not a generator of this algebra")
    return EnvElement(table, 1, {(w,): c for w, c in ordered(table, tuple(word)).items()})


def tensor_multiply(a, b, max_degree=None):
    """Slotwise product; every slot is re-normal-ordered.

    With ``max_degree`` the product is truncated to that deformation degree,
    skipping term pairs whose lowest degrees already exceed it.
    """
    if not isinstance(b, TensorElement) or a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {getattr(b, 'rank', None)}")
    table = a.table
    out = {}
    a_items = list(a.terms.items())
    b_items = list(b.terms.items())
    if max_degree is not None:
        a_items = [(k, c, c.low_degree()) for k, c in a_items]
        b_items = sorted(((k, c, c.low_degree()) for k, c in b_items), key=lambda t: t[2])
    else:
        a_items = [(k, c, 0) for k, c in a_items]
        b_items = [(k, c, 0) for k, c in b_items]
    for ka, ca, da in a_items:
        for kb, cb, db in b_items:
            if max_degree is not None and da + db > max_degree:
                break
            c0 = ca * cb
            if max_degree is not None:
                c0 = c0.truncate(max_degree)
            if not c0:
                continue
            partial = {(): c0}
            for wa, wb in zip(ka, kb):
                if not wa:
                    partial = {k + (wb,): c for k, c in partial.items()}
                elif not wb:
                    partial = {k + (wa,): c for k, c in partial.items()}
                else:
                    prod = ordered(table, wa + wb)
                    if len(prod) == 1:
                        (w, cc), = prod.items()
                        if cc is ONE or cc == ONE:
                            partial = {k + (w,): c for k, c in partial.items()}
                            continue
                    nxt = {}
                    for k, c in partial.items():
                        for w, cc in prod.items():
                            _acc(nxt, k + (w,), c * cc)
                    partial = nxt
            for k, c in partial.items():
                _acc(out, k, c)
    return a._new(out) if type(a) is type(b) else TensorElement(table, a.rank, out)


def commutator(a, b, max_degree=None):
    return tensor_multiply(a, b, max_degree) - tensor_multiply(b, a, max_degree)


def tensor(*elements):
    """Outer product ``a ⊗ b ⊗ ...`` concatenating slots."""
    table = elements[0].table
    terms = {(): ONE}
    for e in elements:
        nxt = {}
        for k, c in terms.items():
            for ke, ce in e.terms.items():
                _acc(nxt, k + ke, c * ce)
        terms = nxt
    rank = sum(e.rank for e in elements)
    if rank == 1:
        return EnvElement(table, 1, terms)
    return TensorElement(table, rank, terms)


def embed(x, slots, rank):
    """Place the slots of ``x`` at positions ``slots`` of a rank-``rank`` tensor.

    ``embed(r, (0, 2), 3)`` is ``r_13``.
    """
    if len(slots) != x.rank:
        raise ValueError("slot count must equal the element rank")
    out = {}
    for key, c in x.terms.items():
        full = [()] * rank
        for s, w in zip(slots, key):
            full[s] = w
        _acc(out, tuple(full), c)
    return TensorElement(x.table, rank, out)


@dataclass
class Conjugation:
    """Result of a (possibly truncated) adjoint-series conjugation.

    ``depth`` is the deepest nested commutator that was nonzero; when
    ``terminated`` is true the series vanished exactly beyond it and
    ``value`` is exact.
    """

    value: TensorElement
    terminated: bool
    depth: int
    order: int


def ad_series_conjugate(r, y, order, max_degree=None, sign=1):
    """``exp(i*sign*ad_r)(y) = sum_k (i*sign)^k / k! ad_r^k(y)`` for ``k <= order``.

    With ``max_degree`` set, terms of deformation degree above it are dropped
    after every step, which keeps the low-degree part exact.  ``terminated`` is
    only reported when no truncation could have hidden a nonzero commutator.
    """
    if r.rank != y.rank:
        raise ValueError("r and y must have equal rank")
    i_s = ScalarSum.number(0, sign)
    lossy = max_degree is not None and y.degree() > max_degree
    total = y if max_degree is None else y.truncate(max_degree)
    current = total
    depth = 0 if current else -1
    r_deg = r.degree()
    for k in range(1, order + 1):
        if not current:
            return Conjugation(total, not lossy, depth, order)
        if max_degree is not None and current.degree() + r_deg > max_degree:
            lossy = True
        current = commutator(r, current, max_degree).scale(i_s * Fraction(1, k))
        if current:
            depth = k
            total = total + current
    if not current:
        return Conjugation(total, not lossy, depth, order)
    if lossy:
        return Conjugation(total, False, depth, order)
    # one more commutator decides whether the truncation was exact
    return Conjugation(total, not commutator(r, current), depth, order)
