"""Expression front-end: polynomials and ideals from text.

Grammar (whitespace-insensitive, every error carries a byte offset):

    ideal   := '(' poly (',' poly)* ')'
    poly    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' NAT]
    atom    := NAT | VAR | '(' poly ')'

Integer literals are reduced mod p; exponents must be natural-number
literals; juxtaposition is not multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ring import Polynomial, RingContext


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
        elif ch in "+-*^(),":
            tokens.append(_Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: RingContext):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.offset)
        return self.advance()

    def parse_poly(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                term = self.parse_term()
                result = result + term if tok.text == "+" else result - term
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp = self.peek()
            if exp.kind != "num":
                raise ParseError("exponent must be a natural number", exp.offset)
            self.advance()
            base = base ** int(exp.text)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Polynomial.constant(self.ctx, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.ctx.variables:
                raise ParseError(f"unknown variable {tok.text!r}", tok.offset)
            self.advance()
            return Polynomial.variable(self.ctx, tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.parse_poly()
            self.expect_op(")")
            return inner
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.offset)
        raise ParseError(f"unexpected token {tok.text!r}", tok.offset)


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    if not text.strip():
        raise ParseError("empty input", 0)
    parser = _Parser(text, ctx)
    poly = parser.parse_poly()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.offset)
    return poly


def parse_ideal(text: str, ctx: RingContext):
    """Parse a parenthesized, comma-separated polynomial list into an Ideal."""
    from .groebner import Ideal

    if not text.strip():
        raise ParseError("empty input", 0)
    parser = _Parser(text, ctx)
    parser.expect_op("(")
    tok = parser.peek()
    if tok.kind == "op" and tok.text == ")":
        raise ParseError("an ideal needs at least one generator", tok.offset)
    gens = [parser.parse_poly()]
    while True:
        tok = parser.peek()
        if tok.kind == "op" and tok.text == ",":
            self_offset = tok.offset
            parser.advance()
            nxt = parser.peek()
            if nxt.kind == "op" and nxt.text in "),":
                raise ParseError("empty generator slot", nxt.offset)
            gens.append(parser.parse_poly())
        elif tok.kind == "op" and tok.text == ")":
            parser.advance()
            break
        else:
            raise ParseError(f"expected ',' or ')'", tok.offset)
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.offset)
    return Ideal(gens, ctx)
