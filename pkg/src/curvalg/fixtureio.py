"""Fixture parsing for the appendix formula files.

Fixture lines have the shape ``<coeff> * U[abc] * W[de]``, one term per
line, ``#`` starting a comment.  Coefficients are arithmetic expressions
over integers and the symbols ``nu`` (the family parameter), ``w`` (the
cube root of unity) and ``e`` (the W-symmetry sign, substituted with a
concrete +-1 while loading).  Keeping the printed factored form in the
files makes the transcription auditable; parsing canonicalizes.
"""

from __future__ import annotations

import re

from .scalars import OMEGA, RationalFunction, as_scalar
from .tensorpoly import TensorPolynomial

_TOKEN = re.compile(r"\s*(\d+|nu|w|e|[()+\-*/^])")

_LINE = re.compile(
    r"^(?P<coeff>.+?)\s*\*\s*U\[(?P<u>[ijklr]{3})\]\s*\*\s*W\[(?P<w>[ijklr]{2})\]\s*$"
)


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExpressionError(f"bad token at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], epsilon: int | None):
        self.tokens = tokens
        self.pos = 0
        self.epsilon = epsilon

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() is not None:
            raise ExpressionError(f"trailing tokens: {self.tokens[self.pos:]}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            expo = self.take()
            if not expo.isdigit():
                raise ExpressionError(f"bad exponent {expo!r}")
            return base ** int(expo)
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok.isdigit():
            return as_scalar(int(tok))
        if tok == "nu":
            return RationalFunction.nu()
        if tok == "w":
            return as_scalar(OMEGA)
        if tok == "e":
            if self.epsilon is None:
                raise ExpressionError("symbol 'e' needs a concrete epsilon")
            return as_scalar(self.epsilon)
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ExpressionError("missing closing parenthesis")
            return value
        raise ExpressionError(f"unexpected token {tok!r}")


def parse_scalar(text: str, epsilon: int | None = None) -> RationalFunction:
    """Parse one coefficient expression into the exact scalar field."""
    return _Parser(_tokenize(text), epsilon).parse()


def parse_fixture(text: str, epsilon: int) -> TensorPolynomial:
    """Parse a fixture body into a canonical polynomial at a concrete epsilon."""
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ExpressionError(f"line {lineno}: cannot parse {raw!r}")
        coeff = parse_scalar(m.group("coeff"), epsilon)
        key = (tuple(m.group("u")), tuple(m.group("w")))
        if key in terms:
            raise ExpressionError(f"line {lineno}: duplicate term {key}")
        if coeff:
            terms[key] = coeff
    return TensorPolynomial(epsilon, terms)


def load_fixture(path, epsilon: int) -> TensorPolynomial:
    """Load a fixture from a Path or importlib.resources traversable."""
    return parse_fixture(path.read_text(encoding="utf-8"), epsilon)
