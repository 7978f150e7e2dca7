"""Bracket expressions: parsing, left-normed rewriting, evaluation.

Grammar: ``expr := name | '[' expr ',' expr ']'``, names ``[a-z][a-z0-9]*``,
whitespace insignificant.  Every expression rewrites into a linear
combination of left-normed words via ``[[a,t],s] -> [a,[t,s]] - [t,[a,s]]``,
and evaluation of the original tree equals evaluation of the rewritten
combination in any algebra satisfying the left Leibniz identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .algebra import Algebra, bracket, left_normed_product
from .scalars import format_rational

__all__ = [
    "Leaf",
    "Node",
    "BracketExpr",
    "ParseError",
    "parse_expr",
    "LinearCombination",
    "left_norm",
    "eval_tree",
    "eval_combination",
]


@dataclass(frozen=True)
class Leaf:
    name: str


@dataclass(frozen=True)
class Node:
    left: "BracketExpr"
    right: "BracketExpr"


BracketExpr = Union[Leaf, Node]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse_name(self) -> Leaf:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not self.text[self.pos].islower():
            raise ParseError("expected a name", self.pos)
        self.pos += 1
        while self.pos < len(self.text) and (
            self.text[self.pos].islower() or self.text[self.pos].isdigit()
        ):
            self.pos += 1
        return Leaf(self.text[start : self.pos])

    def parse_expr(self) -> BracketExpr:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Node(left, right)
        return self.parse_name()


def parse_expr(text: str) -> BracketExpr:
    """Parse a bracket expression, raising ParseError with the position."""
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise ParseError("trailing input", parser.pos)
    return expr


Word = tuple[str, ...]


@dataclass(frozen=True)
class LinearCombination:
    """Terms (coefficient, word); each word w denotes [w1, w2, ..., wk]
    left normed.  No duplicate words, no zero coefficients; terms are kept
    sorted by word for deterministic output."""

    terms: tuple[tuple[Fraction, Word], ...]

    def __post_init__(self):
        words = [w for _, w in self.terms]
        if len(set(words)) != len(words):
            raise ValueError("duplicate words in combination")
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("zero coefficient in combination")

    def format(self) -> str:
        parts = []
        for coeff, word in self.terms:
            sign = "+" if coeff > 0 else "-"
            parts.append(f"{sign}{format_rational(abs(coeff))} [{','.join(word)}]")
        return " ".join(parts) if parts else "0"


def _combine(word_left: Word, word_right: Word, acc: dict[Word, Fraction], scale: Fraction):
    """Accumulate the left-normed expansion of [W_left, W_right].

    A single-element left word prepends; otherwise [[a,t],s] rewrites to
    [a,[t,s]] - [t,[a,s]] and recursion shortens the left word.
    """
    if len(word_left) == 1:
        key = word_left + word_right
        acc[key] = acc.get(key, Fraction(0)) + scale
        return
    head, tail = word_left[0], word_left[1:]
    inner: dict[Word, Fraction] = {}
    _combine(tail, word_right, inner, Fraction(1))
    for word, coeff in inner.items():
        key = (head,) + word
        acc[key] = acc.get(key, Fraction(0)) + scale * coeff
    _combine(tail, (head,) + word_right, acc, -scale)


def _norm(expr: BracketExpr) -> dict[Word, Fraction]:
    if isinstance(expr, Leaf):
        return {(expr.name,): Fraction(1)}
    left = _norm(expr.left)
    right = _norm(expr.right)
    acc: dict[Word, Fraction] = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            _combine(wl, wr, acc, cl * cr)
    return acc


def left_norm(expr: BracketExpr) -> LinearCombination:
    """Rewrite an arbitrary bracketing into left-normed words."""
    acc = _norm(expr)
    terms = tuple(
        (coeff, word) for word, coeff in sorted(acc.items()) if coeff != 0
    )
    return LinearCombination(terms)


def eval_tree(alg: Algebra, expr: BracketExpr, binding: Mapping[str, Sequence]):
    """Evaluate the tree directly under a name -> vector binding."""
    if isinstance(expr, Leaf):
        if expr.name not in binding:
            raise KeyError(f"unbound name: {expr.name!r}")
        return tuple(binding[expr.name])
    return bracket(
        alg, eval_tree(alg, expr.left, binding), eval_tree(alg, expr.right, binding)
    )


def eval_combination(alg: Algebra, lc: LinearCombination, binding: Mapping[str, Sequence]):
    """Evaluate a left-normed combination under a binding."""
    out = list(alg.zero())
    for coeff, word in lc.terms:
        for name in word:
            if name not in binding:
                raise KeyError(f"unbound name: {name!r}")
        value = left_normed_product(alg, [tuple(binding[name]) for name in word])
        for k in range(alg.dim):
            out[k] += coeff * value[k]
    return tuple(out)
