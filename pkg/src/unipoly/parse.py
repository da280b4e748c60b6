"""Parsing polynomial expressions like "X^4 - 2X + 1" or "u*X^2 + (u+1)".

The grammar accepts integer literals, the indeterminate X, the field
generator u (extension fields only), +, -, *, ^, parentheses, implicit
multiplication (2X, X(X+1)), and unary minus.  Integer coefficients
reduce mod p.  Exponents must be nonnegative integer literals.  All
syntax problems raise ConfigError pointing at the offending position.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ConfigError
from .field import FieldSpec
from .poly import Polynomial, poly_gen


class _Token(NamedTuple):
    kind: str  # INT X GEN OP LPAREN RPAREN END
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], i))
            i = j
        elif c in "Xx":
            toks.append(_Token("X", "X", i))
            i += 1
        elif c == "u":
            toks.append(_Token("GEN", "u", i))
            i += 1
        elif c in "+-*^":
            toks.append(_Token("OP", c, i))
            i += 1
        elif c == "(":
            toks.append(_Token("LPAREN", c, i))
            i += 1
        elif c == ")":
            toks.append(_Token("RPAREN", c, i))
            i += 1
        else:
            raise ConfigError(f"poly: unexpected character {c!r} at position {i}")
    toks.append(_Token("END", "", n))
    return toks


class _Parser:
    """Recursive descent: sum -> product -> power -> atom."""

    def __init__(self, text: str, spec: FieldSpec):
        self.text = text
        self.spec = spec
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        value = self.sum()
        t = self.peek()
        if t.kind != "END":
            raise ConfigError(
                f"poly: unexpected {t.text!r} at position {t.pos} in {self.text!r}")
        return value

    def sum(self) -> Polynomial:
        t = self.peek()
        negate = False
        if t.kind == "OP" and t.text in "+-":
            self.take()
            negate = t.text == "-"
        value = self.product()
        if negate:
            value = -value
        while True:
            t = self.peek()
            if t.kind == "OP" and t.text in "+-":
                self.take()
                rhs = self.product()
                value = value - rhs if t.text == "-" else value + rhs
            else:
                return value

    def product(self) -> Polynomial:
        value = self.power()
        while True:
            t = self.peek()
            if t.kind == "OP" and t.text == "*":
                self.take()
                value = value * self.power()
            elif t.kind in ("INT", "X", "GEN", "LPAREN"):
                # adjacency is multiplication: 2X, X(X+1), (u+1)X
                value = value * self.power()
            else:
                return value

    def power(self) -> Polynomial:
        base = self.atom()
        t = self.peek()
        if t.kind == "OP" and t.text == "^":
            self.take()
            e = self.take()
            if e.kind != "INT":
                raise ConfigError(
                    f"poly: exponent must be an integer literal at position {e.pos}")
            return base ** int(e.text)
        return base

    def atom(self) -> Polynomial:
        t = self.take()
        if t.kind == "INT":
            return Polynomial.from_packed(
                self.spec, (self.spec.from_int(int(t.text)).val,))
        if t.kind == "X":
            return poly_gen(self.spec)
        if t.kind == "GEN":
            if self.spec.m == 1:
                raise ConfigError(
                    f"poly: generator u at position {t.pos} needs an extension "
                    f"field, but the field is GF({self.spec.p})")
            return Polynomial.from_packed(self.spec, (self.spec.gen().val,))
        if t.kind == "LPAREN":
            value = self.sum()
            t = self.take()
            if t.kind != "RPAREN":
                raise ConfigError(
                    f"poly: missing ')' at position {t.pos} in {self.text!r}")
            return value
        if t.kind == "OP" and t.text == "-":
            return -self.power()
        raise ConfigError(
            f"poly: expected a term at position {t.pos} in {self.text!r}")


def parse_poly(text: str, spec: FieldSpec) -> Polynomial:
    """Parse an expression in X over the given field.

    raises ConfigError on any syntax problem.
    """
    if not text or not text.strip():
        raise ConfigError("poly: empty expression")
    return _Parser(text, spec).parse()
