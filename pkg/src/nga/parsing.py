"""Parser for the text forms emitted by the renderers.

Grammar (``^`` binds tighter than ``*``; ``/`` only divides by numbers)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' factor) | ('/' NUMBER))*
    factor := atom ['^' ['-'] INT]
    atom   := NUMBER | 'i' | NAME | GENERATOR | '(' expr ')'
"""

import re
from fractions import Fraction

from .algebra import parse_generator
from .enveloping import EnvElement
from .functions import FunctionElement
from .scalars import ScalarSum

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<gen>[MG]:\d+:\d+(?![\w:])|H(?![\w:]))
  | (?P<num>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


class ParseError(ValueError):
    pass


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        pos = m.end()
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group()))
    return out


class _Parser:
    def __init__(self, text, atom, lift=None):
        self.toks = tokenize(text)
        self.pos = 0
        self.atom_fn = atom
        self.lift = lift

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.pos != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return v

    def expr(self):
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        v = self.term()
        if neg:
            v = -v
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self._lift(self.term())
            v = self._lift(v)
            v = v + rhs if op == "+" else v - rhs
        return v

    def _lift(self, v):
        if self.lift is not None and isinstance(v, ScalarSum):
            return self.lift(v)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                v = _mul(v, self.factor())
            else:
                kind, num = self.take()
                if kind != "num":
                    raise ParseError("only division by integers is supported")
                v = _mul(v, ScalarSum.number(Fraction(1, int(num))))
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, num = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer")
            v = v ** (sign * int(num))
        return v

    def atom(self):
        kind, text = self.take()
        if kind == "op" and text == "(":
            v = self.expr()
            self.take(")")
            return v
        if kind == "num":
            return ScalarSum.number(int(text))
        if kind == "name" and text == "i":
            return ScalarSum.imag_unit()
        value = self.atom_fn(kind, text)
        if value is None:
            raise ParseError(f"unknown symbol {text!r}")
        return value


def _mul(a, b):
    if isinstance(a, ScalarSum) and not isinstance(b, ScalarSum):
        return b.scale(a)
    if isinstance(b, ScalarSum) and not isinstance(a, ScalarSum):
        return a.scale(b)
    return a * b


def parse_scalar(text):
    """Parse a coefficient such as ``(3/2)*i*alpha^2*tau^-1``."""
    def atom(kind, tok):
        if kind == "name":
            return ScalarSum.param(tok)
        return None
    v = _Parser(text, atom, None).parse()
    if not isinstance(v, ScalarSum):
        raise ParseError("not a scalar expression")
    return v


def parse_element(text, table):
    """Parse an element of U such as ``H*G:1:1 - i*G:1:0``."""
    def atom(kind, tok):
        if kind == "gen":
            return EnvElement.generator(table, parse_generator(tok))
        if kind == "name":
            return ScalarSum.param(tok)
        return None
    v = _Parser(text, atom, lambda c: EnvElement.scalar(table, c)).parse()
    if isinstance(v, ScalarSum):
        return EnvElement.scalar(table, v)
    return v


_XVAR = re.compile(r"x(\d+)$")


def parse_function(text, mode):
    """Parse a function such as ``x1*x2*t^2`` or ``2*tau^2*C - 2*tau^2``."""
    def atom(kind, tok):
        if kind != "name":
            return None
        m = _XVAR.match(tok)
        if m:
            return FunctionElement.x(int(m.group(1)), mode)
        if tok == "t":
            return FunctionElement.t(mode)
        if tok in ("S", "C"):
            return getattr(FunctionElement, tok)(mode)
        return ScalarSum.param(tok)
    v = _Parser(text, atom, lambda c: FunctionElement.constant(c, mode)).parse()
    if isinstance(v, ScalarSum):
        return FunctionElement.constant(v, mode)
    return v
