"""Surface syntax for algebra elements.

Grammar (whitespace is ignored, ``*`` between factors is optional)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' ['-'] uint)?
    atom   := 'x' uint | 'e' '[' uint ',' uint ']' | 'q' | uint | '(' expr ')'

Negative exponents are accepted on ``q`` only.  The rendering of
:class:`~uqplus.pbw.AlgebraElement` parses back to the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .pbw import AlgebraElement, PBWAlgebra
from .scalar import LaurentScalar

__all__ = ["ParseError", "parse", "eval_expression", "parse_element"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class QAtom:
    pass


@dataclass(frozen=True)
class Gen:
    k: int


@dataclass(frozen=True)
class RootLetter:
    i: int
    j: int


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Node"], ...]


Node = Union[Num, QAtom, Gen, RootLetter, Power, Product, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|([xeq])|([-+*^()\[\],]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        else:
            tok = m.group(m.lastindex)
            tokens.append((tok, tok, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.k = 0
        self.n = n

    def peek(self) -> str:
        return self.tokens[self.k][0]

    def pos(self) -> int:
        return self.tokens[self.k][2]

    def take(self, kind: str) -> str:
        tok = self.tokens[self.k]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.k += 1
        return tok[1]

    def uint(self) -> int:
        return int(self.take("int"))

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take(self.peek()) == "-" else 1
        terms.append((sign, self.term()))
        while self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek()) == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while True:
            if self.peek() == "*":
                self.take("*")
                factors.append(self.factor())
            elif self.peek() in ("x", "e", "q", "int", "("):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        start = self.pos()
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take("^")
        neg = False
        if self.peek() == "-":
            self.take("-")
            neg = True
        exp = self.uint()
        if neg:
            if not isinstance(base, QAtom):
                raise ParseError("negative exponents are only allowed on q", start)
            exp = -exp
        return Power(base, exp)

    def atom(self) -> Node:
        kind = self.peek()
        start = self.pos()
        if kind == "x":
            self.take("x")
            k = self.uint()
            if not 1 <= k <= self.n:
                raise ParseError(f"generator x{k} out of range for rank {self.n}", start)
            return Gen(k)
        if kind == "e":
            self.take("e")
            self.take("[")
            i = self.uint()
            self.take(",")
            j = self.uint()
            self.take("]")
            if not 1 <= i < j <= self.n + 1:
                raise ParseError(f"e[{i},{j}] out of range for rank {self.n}", start)
            return RootLetter(i, j)
        if kind == "q":
            self.take("q")
            return QAtom()
        if kind == "int":
            return Num(self.uint())
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        tok = self.tokens[self.k]
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {found}", start)


def parse(text: str, n: int) -> Node:
    p = _Parser(text, n)
    node = p.expr()
    if p.peek() != "end":
        raise ParseError(f"unexpected {p.tokens[p.k][1]!r}", p.pos())
    return node


def eval_expression(node: Node, alg: PBWAlgebra) -> AlgebraElement:
    if isinstance(node, Num):
        return alg.scalar(node.value)
    if isinstance(node, QAtom):
        return alg.scalar(LaurentScalar.q_power(1))
    if isinstance(node, Gen):
        return alg.gen(node.k)
    if isinstance(node, RootLetter):
        return alg.root_vector(node.i, node.j)
    if isinstance(node, Power):
        if node.exponent < 0:
            return alg.scalar(LaurentScalar.q_power(node.exponent))
        return eval_expression(node.base, alg) ** node.exponent
    if isinstance(node, Product):
        out = alg.one()
        for f in node.factors:
            out = out * eval_expression(f, alg)
        return out
    if isinstance(node, Sum):
        out = alg.zero()
        for sign, t in node.terms:
            val = eval_expression(t, alg)
            out = out + val if sign > 0 else out - val
        return out
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, alg: PBWAlgebra) -> AlgebraElement:
    return eval_expression(parse(text, alg.n), alg)
