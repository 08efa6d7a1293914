"""Tokenizer and polynomial parser for the session grammar.

The polynomial sub-grammar: explicit '*', '^' with nonnegative integer
exponents, rational coefficients written 'p/q', parentheses, unary minus.
Implicit multiplication is a syntax error.  Positions are reported as
1-based line and 0-based column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .rings import Poly, RingSpec


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str   # INT, IDENT, PUNCT, FLAG, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<flag>--[A-Za-z][A-Za-z0-9_-]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[\[\](),;=+\-*/^])
""", re.VERBOSE)


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             line, pos - line_start)
        if m.lastgroup == "ws":
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = pos + chunk.rfind("\n") + 1
        else:
            kind = {"int": "INT", "ident": "IDENT",
                    "punct": "PUNCT", "flag": "FLAG"}[m.lastgroup]
            tokens.append(Token(kind, m.group(), line, pos - line_start))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start))
    return tokens


class TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def next(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != "EOF":
            self.index += 1
        return tok

    def error(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.col)

    def expect_punct(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "PUNCT" or tok.text != text:
            shown = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        return self.next()

    def expect_ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "IDENT":
            shown = tok.text or "end of input"
            raise self.error(f"expected {what}, found {shown!r}")
        return self.next()

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "PUNCT" and tok.text == text

    def accept_punct(self, text: str) -> bool:
        if self.at_punct(text):
            self.next()
            return True
        return False


# -- polynomial expressions ----------------------------------------------------

def _parse_exponent(ts: TokenStream) -> int:
    tok = ts.peek()
    if tok.kind != "INT":
        raise ts.error("expected nonnegative integer exponent")
    ts.next()
    return int(tok.text)


def _parse_factor(ts: TokenStream, ring: RingSpec) -> Poly:
    tok = ts.peek()
    if tok.kind == "INT":
        ts.next()
        num = int(tok.text)
        if ts.at_punct("/"):
            ts.next()
            den_tok = ts.peek()
            if den_tok.kind != "INT":
                raise ts.error("expected denominator after '/'")
            ts.next()
            if int(den_tok.text) == 0:
                raise ts.error("zero denominator", den_tok)
            base = Poly.constant(ring, Fraction(num, int(den_tok.text)))
        else:
            base = Poly.constant(ring, num)
    elif tok.kind == "IDENT":
        ts.next()
        try:
            idx = ring.var_index(tok.text)
        except KeyError:
            raise ts.error(f"unknown variable {tok.text!r}", tok) from None
        base = Poly.variable(ring, idx)
    elif ts.at_punct("("):
        ts.next()
        base = _parse_expr(ts, ring)
        ts.expect_punct(")")
    else:
        shown = tok.text or "end of input"
        raise ts.error(f"expected polynomial factor, found {shown!r}")
    if ts.accept_punct("^"):
        base = base ** _parse_exponent(ts)
    return base


def _parse_product(ts: TokenStream, ring: RingSpec) -> Poly:
    out = _parse_factor(ts, ring)
    while ts.accept_punct("*"):
        out = out * _parse_factor(ts, ring)
    return out


def _parse_expr(ts: TokenStream, ring: RingSpec) -> Poly:
    negate = False
    if ts.accept_punct("-"):
        negate = True
    out = _parse_product(ts, ring)
    if negate:
        out = -out
    while True:
        if ts.accept_punct("+"):
            out = out + _parse_product(ts, ring)
        elif ts.accept_punct("-"):
            out = out - _parse_product(ts, ring)
        else:
            return out


def parse_poly_tokens(ts: TokenStream, ring: RingSpec) -> Poly:
    return _parse_expr(ts, ring)


def parse_poly(text: str, ring: RingSpec) -> Poly:
    ts = TokenStream(tokenize(text))
    poly = _parse_expr(ts, ring)
    tok = ts.peek()
    if tok.kind != "EOF":
        raise ts.error(f"trailing input {tok.text!r}")
    return poly
