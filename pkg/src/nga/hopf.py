"""Classical Hopf structure, Abelian r-matrices, twists and their checks."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import G, M
from .enveloping import (
    EnvElement, TensorElement, ad_series_conjugate, commutator, embed, ordered,
    tensor, tensor_multiply,
)
from .scalars import ScalarSum

ONE = ScalarSum.one()
DEFAULT_ORDER = 8


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


# -- classical structure -----------------------------------------------------

def _word_coproduct(word):
    """Primitive coproduct of a word: sum over position subsets.

    Subsequences of a PBW word stay PBW-ordered, so no re-ordering is needed.
    """
    out = {}
    n = len(word)
    for mask in range(1 << n):
        left = tuple(word[k] for k in range(n) if mask >> k & 1)
        right = tuple(word[k] for k in range(n) if not mask >> k & 1)
        key = (left, right)
        out[key] = out.get(key, 0) + 1
    return out


def coproduct_slot(x, slot):
    """Apply the primitive coproduct to one slot, raising the rank by one."""
    out = {}
    for key, c in x.terms.items():
        for (l, r), mult in _word_coproduct(key[slot]).items():
            _acc(out, key[:slot] + (l, r) + key[slot + 1:], c * mult)
    return TensorElement(x.table, x.rank + 1, out)


def classical_coproduct(x):
    """``Δ0`` on an :class:`EnvElement` (``a ⊗ 1 + 1 ⊗ a`` on generators)."""
    if x.rank != 1:
        raise ValueError("classical_coproduct expects an element of U")
    return coproduct_slot(x, 0)


def counit(x):
    """``ε``: keeps only the coefficient of the empty word."""
    if x.rank != 1:
        raise ValueError("counit expects an element of U")
    return x.terms.get(((),), ScalarSum.zero())


def counit_slot(x, slot):
    out = {}
    for key, c in x.terms.items():
        if not key[slot]:
            _acc(out, key[:slot] + key[slot + 1:], c)
    rank = x.rank - 1
    if rank == 1:
        return EnvElement(x.table, 1, out)
    return TensorElement(x.table, rank, out)


def _antipode_word(table, word):
    sign = -1 if len(word) % 2 else 1
    return {w: c * sign for w, c in ordered(table, tuple(reversed(word))).items()}


def classical_antipode(x):
    """``S0``: anti-homomorphic extension of ``a -> -a``."""
    if x.rank != 1:
        raise ValueError("classical_antipode expects an element of U")
    out = {}
    for (w,), c in x.terms.items():
        for pw, cc in _antipode_word(x.table, w).items():
            _acc(out, (pw,), c * cc)
    return EnvElement(x.table, 1, out)


def multiply_slots(x):
    """``m``: collapse a rank-2 element into U."""
    out = {}
    for (a, b), c in x.terms.items():
        for w, cc in ordered(x.table, a + b).items():
            _acc(out, (w,), c * cc)
    return EnvElement(x.table, 1, out)


# -- r-matrices and twists ---------------------------------------------------

def alpha_name(i, j):
    return f"alpha_{i}_{j}"


def default_alpha_matrix(d):
    """Antisymmetric matrix of symbols ``alpha_i_j`` (1-based)."""
    mat = [[ScalarSum.zero() for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            a = ScalarSum.param(alpha_name(i + 1, j + 1))
            mat[i][j] = a
            mat[j][i] = -a
    return mat


def _wedge(table, a, b, coeff):
    """``coeff * (a ⊗ b - b ⊗ a)`` for generators a, b."""
    t = TensorElement.from_words(table, [(a,), (b,)], coeff)
    return t - TensorElement.from_words(table, [(b,), (a,)], coeff)


@dataclass
class RMatrix:
    """An Abelian classical r-matrix with its rank-2 expansion.

    ``carriers`` lists ``(coeff, A, B)`` with ``r = sum coeff * A ⊗ B``.
    """

    kind: str
    n: int
    expansion: TensorElement
    m: int = None
    i: int = None
    k: int = None
    l: int = None
    alpha: object = None
    carriers: list = field(default_factory=list)

    @property
    def table(self):
        return self.expansion.table

    def label(self):
        if self.kind == "nm":
            return f"r^({self.n},{self.m})"
        return f"r^({self.n})[i={self.i},k={self.k},l={self.l}]"

    def substitute(self, values):
        exp = self.expansion.substitute(values)
        return RMatrix(self.kind, self.n, exp, self.m, self.i, self.k, self.l,
                       self.alpha, _carriers(exp))


def _carriers(expansion):
    out = []
    for (a, b), c in sorted(expansion.terms.items()):
        if len(a) != 1 or len(b) != 1:
            raise ValueError("r-matrix terms must be products of single generators")
        out.append((c, a[0], b[0]))
    return out


def _check_abelian(table, carriers):
    gens = sorted({g for _, a, b in carriers for g in (a, b)})
    for x, y in combinations(gens, 2):
        if table.bracket(x, y):
            raise ValueError(f"carriers {x} and {y} do not commute")


def _coerce_alpha_matrix(alpha, d):
    if alpha is None:
        return default_alpha_matrix(d)
    if isinstance(alpha, dict):
        mat = [[ScalarSum.zero() for _ in range(d)] for _ in range(d)]
        for (i, j), v in alpha.items():
            v = ScalarSum.coerce(v)
            mat[i - 1][j - 1] = v
            if (j, i) not in alpha:
                mat[j - 1][i - 1] = -v
        alpha = mat
    mat = [[ScalarSum.coerce(v) for v in row] for row in alpha]
    if len(mat) != d or any(len(row) != d for row in mat):
        raise ValueError(f"alpha matrix must be {d}x{d}")
    for i in range(d):
        for j in range(d):
            if mat[i][j] != -mat[j][i]:
                raise ValueError(f"alpha matrix is not antisymmetric at ({i + 1}, {j + 1})")
    return mat


def make_nm_r(table, n, m, alpha=None):
    """``r^(n,m) = 1/2 sum_ij alpha^ij G_i^(n) ∧ G_j^(m)``."""
    spec = table.spec
    for lvl in (n, m):
        if not 0 <= lvl <= spec.N:
            raise ValueError(f"twist level {lvl} outside 0..{spec.N}")
    mat = _coerce_alpha_matrix(alpha, spec.d)
    half = Fraction(1, 2)
    exp = TensorElement(table, 2)
    for i in range(1, spec.d + 1):
        for j in range(1, spec.d + 1):
            a = mat[i - 1][j - 1]
            if a:
                exp = exp + _wedge(table, G(i, n), G(j, m), a * half)
    carriers = _carriers(exp)
    _check_abelian(table, carriers)
    return RMatrix("nm", n, exp, m=m, alpha=mat, carriers=carriers)


def make_single_r(table, n, i, k, l, alpha="alpha"):
    """``r^(n) = alpha G_i^(n) ∧ M_kl`` with ``i`` not in ``{k, l}``."""
    spec = table.spec
    if spec.d < 3:
        raise ValueError("the single-index twist needs d >= 3")
    if i in (k, l):
        raise ValueError("index i must differ from k and l")
    if not k < l:
        raise ValueError("indices must satisfy k < l")
    if not all(1 <= v <= spec.d for v in (i, k, l)):
        raise ValueError("indices out of range")
    if not 0 <= n <= spec.N:
        raise ValueError(f"twist level {n} outside 0..{spec.N}")
    a = ScalarSum.param(alpha) if isinstance(alpha, str) else ScalarSum.coerce(alpha)
    exp = _wedge(table, G(i, n), M(k, l), a)
    carriers = _carriers(exp)
    _check_abelian(table, carriers)
    return RMatrix("single", n, exp, i=i, k=k, l=l, alpha=a, carriers=carriers)


def make_r(table, kind, **kw):
    if kind == "nm":
        return make_nm_r(table, kw["n"], kw["m"], kw.get("alpha"))
    if kind == "single":
        return make_single_r(table, kw["n"], kw["i"], kw["k"], kw["l"], kw.get("alpha", "alpha"))
    raise ValueError(f"unknown r-matrix kind {kind!r}")


def schouten_check(r):
    """``[r12, r13 + r23] + [r13, r23]`` in U⊗U⊗U (zero for a solution of CYBE)."""
    x = r.expansion if isinstance(r, RMatrix) else r
    r12 = embed(x, (0, 1), 3)
    r13 = embed(x, (0, 2), 3)
    r23 = embed(x, (1, 2), 3)
    return commutator(r12, r13 + r23) + commutator(r13, r23)


@dataclass
class Twist:
    """``F = exp(i r)`` handled as a series truncated at deformation order ``order``."""

    r: RMatrix
    order: int = DEFAULT_ORDER

    @property
    def table(self):
        return self.r.table

    def label(self):
        return f"F[{self.r.label()}]"


def twist_series(tw, sign=1):
    """``sum_{k<=K} (i*sign*r)^k / k!`` in U⊗U."""
    r = tw.r.expansion
    unit = TensorElement.unit(tw.table, 2)
    total, power = unit, unit
    i_s = ScalarSum.number(0, sign)
    for k in range(1, tw.order + 1):
        power = tensor_multiply(power, r, tw.order).scale(i_s * Fraction(1, k))
        if not power:
            break
        total = total + power
    return total


def normalization_check(tw):
    """``(ε⊗1)F = (1⊗ε)F = 1`` on the series expansion."""
    F = twist_series(tw)
    one = EnvElement.unit(tw.table)
    return counit_slot(F, 0) == one and counit_slot(F, 1) == one


def cocycle_check(tw):
    """``F12 (Δ0⊗1)F - F23 (1⊗Δ0)F`` through order K."""
    F = twist_series(tw)
    K = tw.order
    unit = EnvElement.unit(tw.table)
    lhs = tensor_multiply(tensor(F, unit), coproduct_slot(F, 0), K)
    rhs = tensor_multiply(tensor(unit, F), coproduct_slot(F, 1), K)
    return lhs - rhs


def twisted_coproduct(x, tw):
    """``F Δ0(x) F^-1`` via the adjoint series of ``i r``."""
    return ad_series_conjugate(tw.r.expansion, classical_coproduct(x), tw.order,
                               max_degree=tw.order)


def _twisted_coproduct_slot(y, tw, slot):
    """``(Δα ⊗ id)`` (slot 0) or ``(id ⊗ Δα)`` (slot 1) on a rank-2 element."""
    r = embed(tw.r.expansion, (slot, slot + 1), y.rank + 1)
    lifted = coproduct_slot(y, slot)
    return ad_series_conjugate(r, lifted, tw.order, max_degree=tw.order).value


def coassociativity_check(x, tw):
    """``(Δα⊗id)Δα(x) - (id⊗Δα)Δα(x)`` through order K."""
    d = twisted_coproduct(x, tw).value
    return _twisted_coproduct_slot(d, tw, 0) - _twisted_coproduct_slot(d, tw, 1)


def twist_u(tw):
    """``u = sum f(1) S0(f(2))`` from the Sweedler terms of the series of F."""
    F = twist_series(tw)
    out = {}
    for (a, b), c in F.terms.items():
        for sb, cb in _antipode_word(tw.table, b).items():
            for w, cc in ordered(tw.table, a + sb).items():
                _acc(out, (w,), c * cb * cc)
    return EnvElement(tw.table, 1, out).truncate(tw.order)


def series_inverse(u, order):
    """Inverse of ``u = 1 + v`` with ``v`` of positive degree, through ``order``."""
    one = EnvElement.unit(u.table)
    v = u - one
    if any(c.truncate(0) for c in v.terms.values()):
        raise ValueError("series inverse needs u = 1 + (positive degree)")
    total, power = one, one
    for _ in range(order):
        power = tensor_multiply(power, -v, order)
        if not power:
            break
        total = total + power
    return total


def twisted_antipode(x, tw):
    """``u S0(x) u^-1`` through order K."""
    u = twist_u(tw)
    u_inv = series_inverse(u, tw.order)
    s = classical_antipode(x)
    return tensor_multiply(tensor_multiply(u, s, tw.order), u_inv, tw.order)


def _twisted_antipode_word_map(tw):
    u = twist_u(tw)
    u_inv = series_inverse(u, tw.order)
    cache = {}

    def apply(word):
        if word not in cache:
            s = EnvElement(tw.table, 1, {(w,): c for w, c in _antipode_word(tw.table, word).items()})
            cache[word] = tensor_multiply(tensor_multiply(u, s, tw.order), u_inv, tw.order)
        return cache[word]

    return apply


def antipode_axiom_check(x, tw):
    """``m(Sα⊗id)Δα(x) - ε(x)1`` through order K."""
    d = twisted_coproduct(x, tw).value
    s_alpha = _twisted_antipode_word_map(tw)
    out = EnvElement(tw.table, 1, {})
    for (a, b), c in d.terms.items():
        right = EnvElement(tw.table, 1, {(b,): c})
        out = out + tensor_multiply(s_alpha(a), right, tw.order)
    out = out.truncate(tw.order)
    return out - EnvElement.scalar(tw.table, counit(x))


def classical_axioms_check(table):
    """Counit and antipode axioms of the primitive structure on every generator.

    Returns the list of generators on which an axiom fails.
    """
    bad = []
    for g in table.generators:
        x = EnvElement.generator(table, g)
        d = classical_coproduct(x)
        if counit_slot(d, 0) != x or counit_slot(d, 1) != x:
            bad.append((g, "counit"))
        out = EnvElement(table, 1, {})
        for (a, b), c in d.terms.items():
            s = EnvElement(table, 1, {(w,): cc for w, cc in _antipode_word(table, a).items()})
            out = out + tensor_multiply(s, EnvElement(table, 1, {(b,): c}))
        if out != EnvElement.scalar(table, counit(x)):
            bad.append((g, "antipode"))
    return bad
