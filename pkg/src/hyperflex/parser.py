"""Recursive-descent parser for polynomial text.

Grammar (whitespace is ignored)::

    expr     := ["+" | "-"] term (("+" | "-") term)*
    term     := rational ["*" factor ("*" factor)*]
              | factor ("*" factor)*
    factor   := variable ["^" natural]
    rational := natural ["/" positive]
    variable := "x" natural          (index below nvars)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import MultiPoly

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^])|(?P<bad>\S))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"unexpected character {value!r}", start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        kind, value, pos = self.tok
        if kind != "op" or value != op:
            raise PolynomialSyntaxError(f"expected {op!r}, found {value or 'end of input'!r}", pos)
        self.i += 1

    def parse(self) -> MultiPoly:
        kind, value, pos = self.tok
        if kind == "end":
            raise PolynomialSyntaxError("empty polynomial", pos)
        sign = 1
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.take()
        result = self.term() * sign
        while True:
            kind, value, pos = self.tok
            if kind == "end":
                return result
            if kind == "op" and value in "+-":
                self.take()
                t = self.term()
                result = result + t if value == "+" else result - t
            else:
                raise PolynomialSyntaxError(f"expected '+' or '-', found {value!r}", pos)

    def term(self) -> MultiPoly:
        kind, value, pos = self.tok
        if kind == "num":
            coeff = self.rational()
            result = MultiPoly.constant(self.nvars, coeff)
            if self.tok[0] == "op" and self.tok[1] == "*":
                self.take()
                result = result * self.factor()
        elif kind == "var":
            result = self.factor()
        else:
            raise PolynomialSyntaxError(f"expected a coefficient or variable, found {value or 'end of input'!r}", pos)
        while self.tok[0] == "op" and self.tok[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def rational(self) -> Fraction:
        _, value, _ = self.take()
        num = int(value)
        if self.tok[0] == "op" and self.tok[1] == "/":
            self.take()
            kind, den, pos = self.tok
            if kind != "num":
                raise PolynomialSyntaxError("expected a denominator", pos)
            self.take()
            if int(den) == 0:
                raise PolynomialSyntaxError("zero denominator", pos)
            return Fraction(num, int(den))
        return Fraction(num)

    def factor(self) -> MultiPoly:
        kind, value, pos = self.tok
        if kind != "var":
            raise PolynomialSyntaxError(f"expected a variable, found {value or 'end of input'!r}", pos)
        self.take()
        index = int(value[1:])
        if index >= self.nvars:
            raise PolynomialSyntaxError(f"unknown variable {value!r} (have x0..x{self.nvars - 1})", pos)
        var = MultiPoly.variable(self.nvars, index)
        if self.tok[0] == "op" and self.tok[1] == "^":
            self.take()
            kind, exp, epos = self.tok
            if kind != "num":
                raise PolynomialSyntaxError("expected a natural exponent", epos)
            self.take()
            e = int(exp)
            if e > MAX_EXPONENT:
                raise PolynomialSyntaxError(f"exponent {e} exceeds limit {MAX_EXPONENT}", epos)
            return var**e
        return var


def parse_poly(text: str, nvars: int) -> MultiPoly:
    """Parse ``text`` into a polynomial in ``x0 .. x{nvars-1}``."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    return _Parser(text, nvars).parse()


def infer_nvars(text: str) -> int:
    """One more than the largest variable index that occurs in ``text``."""
    indices = [int(m) for m in re.findall(r"x(\d+)", text)]
    return max(indices) + 1 if indices else 1


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(text)


def parse_point(text: str) -> list[Fraction]:
    """Comma-separated rationals, e.g. ``"1,-1/2,0,3"``."""
    return [parse_rational(part) for part in text.split(",")]
