"""Recursive-descent parser for the polynomial text grammar.

Grammar (whitespace insignificant)::

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' exponent)?
    base     := variable | rational | '(' expr ')'
    rational := int ('/' posint)?

Division is only part of a rational literal; ``1/x`` and negative
exponents are rejected as :class:`~lctplane.errors.NonPolynomial`.
Implicit multiplication by juxtaposition is a syntax error.

The module is variable-set generic (the CLI parses projective input in
x, y, z); ``parse_poly`` is the bivariate entry point returning a
:class:`~lctplane.poly.BPoly`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NonPolynomial, ParseError
from .poly import BPoly

__all__ = ["parse_poly", "parse_terms", "parse_rational"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", bad_at)
        number, name, op = m.groups()
        if number is not None:
            tokens.append(("int", int(number), m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        else:
            tokens.append(("op", op, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Parses into n-variable term dicts: {(e_1, ..., e_n): Fraction}."""

    def __init__(self, text, variables):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = _tokenize(text)
        self.idx = 0

    # token helpers

    def peek(self):
        return self.tokens[self.idx]

    def advance(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    # term-dict arithmetic (n variables; parsing is not hot, no kernels)

    def _zero(self):
        return {}

    def _const(self, c):
        c = Fraction(c)
        return {(0,) * len(self.variables): c} if c else {}

    def _add(self, a, b):
        out = dict(a)
        for exp, c in b.items():
            acc = out.get(exp, Fraction(0)) + c
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        return out

    def _mul(self, a, b):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(u + v for u, v in zip(ea, eb))
                acc = out.get(exp, Fraction(0)) + ca * cb
                if acc:
                    out[exp] = acc
                else:
                    out.pop(exp, None)
        return out

    def _pow(self, a, n):
        out = self._const(1)
        for _ in range(n):
            out = self._mul(out, a)
        return out

    # grammar rules

    def parse(self):
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", pos)
        return result

    def expr(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            negate = value == "-"
            self.advance()
        total = self.term()
        if negate:
            total = self._mul(total, self._const(-1))
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                if value == "-":
                    rhs = self._mul(rhs, self._const(-1))
                total = self._add(total, rhs)
            else:
                return total

    def term(self):
        total = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                total = self._mul(total, self.factor())
            elif kind == "op" and value == "/":
                raise NonPolynomial(
                    "division is only allowed inside rational literals", pos
                )
            elif kind in ("int", "name") or (kind == "op" and value == "("):
                raise ParseError(
                    "implicit multiplication by juxtaposition is not allowed", pos
                )
            else:
                return total

    def factor(self):
        base = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            n = self.exponent()
            base = self._pow(base, n)
        return base

    def exponent(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.advance()
            return value
        if kind == "op" and value == "(":
            # only to diagnose x^(-1) as NonPolynomial, per the grammar
            self.advance()
            sign = 1
            kind, value, pos2 = self.peek()
            if kind == "op" and value in "+-":
                sign = -1 if value == "-" else 1
                self.advance()
            kind, value, pos3 = self.peek()
            if kind != "int":
                raise ParseError("expected integer exponent", pos3)
            self.advance()
            self.expect_op(")")
            if sign < 0:
                raise NonPolynomial("negative exponent", pos2)
            return value
        raise ParseError("expected nonnegative integer exponent", pos)

    def base(self):
        kind, value, pos = self.peek()
        if kind == "name":
            if value not in self.variables:
                raise ParseError(
                    f"unknown variable {value!r}, expected one of "
                    f"{'/'.join(self.variables)}",
                    pos,
                )
            self.advance()
            exp = tuple(
                1 if v == value else 0 for v in self.variables
            )
            return {exp: Fraction(1)}
        if kind == "int":
            self.advance()
            numerator = value
            kind, value, pos2 = self.peek()
            if kind == "op" and value == "/":
                self.advance()
                kind, value, pos3 = self.peek()
                if kind == "name":
                    raise NonPolynomial("division by a variable", pos3)
                if kind != "int":
                    raise ParseError("expected positive integer denominator", pos3)
                if value == 0:
                    raise ParseError("zero denominator", pos3)
                self.advance()
                return self._const(Fraction(numerator, value))
            return self._const(numerator)
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected variable, rational or parenthesized expression", pos)


def parse_terms(text, variables):
    """Parse ``text`` over the given variable names into an n-var term dict."""
    return _Parser(text, variables).parse()


def parse_poly(text):
    """Parse a bivariate polynomial in x and y."""
    terms = parse_terms(text, ("x", "y"))
    return BPoly(terms)


def parse_rational(text):
    """Parse a rational literal ``p`` or ``p/q`` (optionally signed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}") from exc
