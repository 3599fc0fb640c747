"""Generators and Lie brackets of the N-enlarged Galilei algebra.

Generators are ``M(i, j)`` (rotations, ``i < j``), ``H`` (time translation)
and ``G(i, n)`` for ``n = 0..N`` (``G(i, 0)`` is the momentum ``P_i``,
``G(i, 1)`` the boost ``K_i``).  The Newton-Hooke variants add a bracket
between ``H`` and ``G(i, 0)`` proportional to ``tau^-2``.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import NamedTuple

from .scalars import I, ScalarSum

GALILEI = "galilei"
NH_PLUS = "nh+"
NH_MINUS = "nh-"
VARIANTS = (GALILEI, NH_PLUS, NH_MINUS)

NH_MAX_LEVEL = 6


class Generator(NamedTuple):
    """Sortable generator label.

    ``kind`` is 0 for M, 1 for H, 2 for G.  For G the fields are
    ``(level, index)`` so that tuple order is the PBW order
    M (lexicographic) < H < G (by level, then index).
    """

    kind: int
    a: int = 0
    b: int = 0

    @property
    def level(self):
        return self.a if self.kind == 2 else None

    @property
    def index(self):
        return self.b if self.kind == 2 else None

    def __str__(self):
        if self.kind == 0:
            return f"M:{self.a}:{self.b}"
        if self.kind == 1:
            return "H"
        return f"G:{self.b}:{self.a}"

    def __repr__(self):
        return str(self)

    def latex(self):
        if self.kind == 0:
            return f"M_{{{self.a}{self.b}}}"
        if self.kind == 1:
            return "H"
        return f"G_{{{self.b}}}^{{({self.a})}}"


def M(i, j):
    if not 1 <= i < j:
        raise ValueError(f"M indices must satisfy 1 <= i < j, got ({i}, {j})")
    return Generator(0, i, j)


H = Generator(1)


def G(i, n):
    if i < 1 or n < 0:
        raise ValueError(f"G needs a spatial index >= 1 and a level >= 0, got ({i}, {n})")
    return Generator(2, n, i)


def parse_generator(text):
    """Parse ``"M:i:j"``, ``"H"`` or ``"G:i:n"``."""
    parts = text.strip().split(":")
    try:
        if parts == ["H"]:
            return H
        if parts[0] == "M" and len(parts) == 3:
            return M(int(parts[1]), int(parts[2]))
        if parts[0] == "G" and len(parts) == 3:
            return G(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"bad generator {text!r}: {exc}") from None
    raise ValueError(f"bad generator {text!r}")


@dataclass(frozen=True)
class AlgebraSpec:
    N: int
    d: int = 3
    variant: str = GALILEI

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.d < 2:
            raise ValueError("spatial dimension must be at least 2")
        if self.N < 0:
            raise ValueError("N must be non-negative")
        if self.variant != GALILEI:
            if self.N > NH_MAX_LEVEL:
                raise ValueError("Newton-Hooke coefficient functions are only known for N <= 6")
            if self.N < 1:
                raise ValueError("Newton-Hooke variant needs N >= 1 ([H, G^(0)] involves G^(1))")

    @property
    def sign(self):
        return {GALILEI: 0, NH_PLUS: 1, NH_MINUS: -1}[self.variant]

    def generators(self):
        d = self.d
        gens = [M(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        gens.append(H)
        gens.extend(G(i, n) for n in range(self.N + 1) for i in range(1, d + 1))
        return gens

    def contains(self, g):
        if g.kind == 0:
            return 1 <= g.a < g.b <= self.d
        if g.kind == 1:
            return True
        return 1 <= g.b <= self.d and 0 <= g.a <= self.N


def _add(acc, g, c):
    v = acc.get(g)
    v = c if v is None else v + c
    if v:
        acc[g] = v
    else:
        acc.pop(g, None)


def m_element(i, j):
    """``M(i, j)`` as a Lie element for arbitrary ordered indices."""
    if i == j:
        return {}
    if i < j:
        return {M(i, j): ScalarSum.one()}
    return {M(j, i): -ScalarSum.one()}


def _delta(a, b):
    return 1 if a == b else 0


class BracketTable:
    """Structure constants for one :class:`AlgebraSpec`.

    ``bracket(X, Y)`` returns a dict ``{Generator: ScalarSum}``; only nonzero
    brackets are stored and antisymmetry is built in.
    """

    def __init__(self, spec):
        self.spec = spec
        self.generators = spec.generators()
        self._index = {g: k for k, g in enumerate(self.generators)}
        self._table = {}
        self.notes = []
        # normal-ordering memo, filled by the enveloping module
        self.word_cache = {}
        for x in self.generators:
            for y in self.generators:
                if x < y:
                    val = self._compute(x, y)
                    if val:
                        self._table[(x, y)] = val
                        self._table[(y, x)] = {g: -c for g, c in val.items()}
        if spec.variant != GALILEI:
            s = "+" if spec.sign > 0 else "-"
            self.notes.append(
                f"[H, G^(0)] = {s}(i/tau^2) G^(1) is forced by f0' = {s}f1/tau^2 of the "
                f"representation; a {s}(i/tau) normalization would break the homomorphism "
                "property")

    def __contains__(self, g):
        return g in self._index

    def __len__(self):
        return len(self.generators)

    def bracket(self, x, y):
        return self._table.get((x, y), {})

    def nonzero_pairs(self):
        return [(x, y) for (x, y) in self._table if x < y]

    def _compute(self, x, y):
        # x < y in the generator order
        out = {}
        if x.kind == 0 and y.kind == 0:
            i, j, k, l = x.a, x.b, y.a, y.b
            for coeff, (p, q) in ((_delta(i, l), (j, k)), (-_delta(j, l), (i, k)),
                                  (_delta(j, k), (i, l)), (-_delta(i, k), (j, l))):
                if coeff:
                    for g, c in m_element(p, q).items():
                        _add(out, g, I * c * coeff)
            return out
        if x.kind == 0 and y.kind == 2:
            i, j = x.a, x.b
            n, k = y.a, y.b
            if j == k:
                _add(out, G(i, n), I)
            if i == k:
                _add(out, G(j, n), -I)
            return out
        if x.kind == 1 and y.kind == 2:
            # [H, G_i^(n)] = -[G_i^(n), H] = i n G_i^(n-1)
            n, i = y.a, y.b
            if n >= 1:
                _add(out, G(i, n - 1), I * n)
            elif self.spec.variant != GALILEI and self.spec.N >= 1:
                coef = I * ScalarSum.param("tau", -2) * self.spec.sign
                _add(out, G(i, 1), coef)
            return out
        return out


def build_algebra(spec):
    return BracketTable(spec)


def lie_bracket(table, u, v):
    """Bracket of two Lie elements (dicts ``{Generator: ScalarSum}``)."""
    out = {}
    for x, a in u.items():
        for y, b in v.items():
            for g, c in table.bracket(x, y).items():
                _add(out, g, a * b * c)
    return out


def jacobi_check(table):
    """Nonzero Jacobiator residuals over all generator triples.

    Returns a list of ``(X, Y, Z, residual)``; empty means the identity holds.
    """
    failures = []
    one = ScalarSum.one()
    for x, y, z in combinations_with_replacement(table.generators, 3):
        X, Y, Z = {x: one}, {y: one}, {z: one}
        res = {}
        for a, b, c in ((X, Y, Z), (Y, Z, X), (Z, X, Y)):
            for g, coef in lie_bracket(table, lie_bracket(table, a, b), c).items():
                _add(res, g, coef)
        if res:
            failures.append((x, y, z, res))
    return failures


def closure_violations(table):
    """Bracket values that fall outside the generator set."""
    bad = []
    for (x, y), val in table._table.items():
        for g in val:
            if g not in table:
                bad.append((x, y, g))
    return bad
