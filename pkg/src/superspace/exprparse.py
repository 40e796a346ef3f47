"""Parser for supernumber expressions.

Grammar (whitespace insensitive):

    expr   := [sign] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := NUMBER | NUMBER 'i' | 'i' | 'x' INT | 'bx' INT | '(' expr ')'
    NUMBER := INT ['/' INT]

xk is the k-th generator, bxk its conjugate (the paired generator), i the
imaginary unit.  str(SuperNumber) emits text in this grammar, so parsing
its output round trips.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExprSyntaxError, StructureError
from .grassmann import GaussianRational, GrassmannAlgebra, SuperNumber

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>\d+(?:/\d+)?)(?P<imag>i)?"
    r"|(?P<bgen>bx(?P<bidx>\d+))"
    r"|(?P<gen>x(?P<gidx>\d+))"
    r"|(?P<unit>i)"
    r"|(?P<op>[+\-*()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("ws") is None:
            if m.group("number"):
                kind = "imagnum" if m.group("imag") else "number"
                tokens.append((kind, m.group("number"), pos))
            elif m.group("bgen"):
                tokens.append(("bgen", m.group("bidx"), pos))
            elif m.group("gen"):
                tokens.append(("gen", m.group("gidx"), pos))
            elif m.group("unit"):
                tokens.append(("unit", "i", pos))
            else:
                tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: GrassmannAlgebra):
        self.tokens = _tokenize(text)
        self.k = 0
        self.algebra = algebra

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.k]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> SuperNumber:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", pos)
        return value

    def expr(self) -> SuperNumber:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                total = total - rhs if val == "-" else total + rhs
            else:
                return total

    def term(self) -> SuperNumber:
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def _fraction(self, text: str, pos: int) -> Fraction:
        num, slash, den = text.partition("/")
        if slash and int(den) == 0:
            raise ExprSyntaxError("zero denominator", pos)
        return Fraction(int(num), int(den)) if slash else Fraction(int(num))

    def factor(self) -> SuperNumber:
        kind, val, pos = self.advance()
        if kind == "number":
            return self.algebra.scalar(self._fraction(val, pos))
        if kind == "imagnum":
            return self.algebra.scalar(GaussianRational(0, self._fraction(val, pos)))
        if kind == "unit":
            return self.algebra.i()
        if kind == "gen":
            return self._generator(int(val), pos)
        if kind == "bgen":
            g = self._generator(int(val), pos)
            return g.bar()
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(f"expected a factor, found {val or kind!r}", pos)

    def _generator(self, k: int, pos: int) -> SuperNumber:
        try:
            return self.algebra.gen(k)
        except StructureError as exc:
            raise ExprSyntaxError(str(exc), pos) from None


def parse_expression(text: str, algebra: GrassmannAlgebra) -> SuperNumber:
    """Evaluate an expression to a supernumber over the given algebra."""
    return _Parser(text, algebra).parse()
