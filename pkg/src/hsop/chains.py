"""Invariants and covariants built as trees of transvectants.

Chains are written in a small expression language::

    f                  the ground form
    (A, B)_k           k-th transvectant
    A * B              product (the 0-th transvectant)
    A^k                k-fold product
    3/2 * A            scalar multiple
    name               a binding supplied in the environment

e.g. ``"(psi1, psi^5)_10"`` with ``psi = (f,f)_6`` and ``psi1 = (f,f)_2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from hsop.errors import OrderTooHigh
from hsop.forms import BinaryForm, transvectant

__all__ = [
    "Ground",
    "Transvect",
    "Scale",
    "Node",
    "InvariantChain",
    "parse_chain",
    "shape",
    "evaluate",
    "evaluate_chain",
]


@dataclass(frozen=True, eq=False)
class Ground:
    pass


@dataclass(frozen=True, eq=False)
class Transvect:
    left: "Node"
    right: "Node"
    k: int


@dataclass(frozen=True, eq=False)
class Scale:
    factor: Fraction
    child: "Node"


Node = Union[Ground, Transvect, Scale]

GROUND = Ground()


def shape(node: Node, n: int) -> tuple[int, int]:
    """``(degree in the coefficients, order in x, y)`` of a node applied to an ``n``-ic."""
    if isinstance(node, Ground):
        return 1, n
    if isinstance(node, Scale):
        return shape(node.child, n)
    dl, ol = shape(node.left, n)
    dr, orr = shape(node.right, n)
    if node.k > min(ol, orr):
        raise OrderTooHigh(f"transvectant index {node.k} exceeds orders {ol}, {orr}")
    return dl + dr, ol + orr - 2 * node.k


def evaluate(node: Node, f: BinaryForm, memo: dict[int, BinaryForm] | None = None) -> BinaryForm:
    """Evaluate a tree on ``f``; shared subtrees are computed once."""
    if memo is None:
        memo = {}
    hit = memo.get(id(node))
    if hit is not None:
        return hit
    if isinstance(node, Ground):
        out = f
    elif isinstance(node, Scale):
        out = evaluate(node.child, f, memo).scale(node.factor)
    else:
        out = transvectant(evaluate(node.left, f, memo), evaluate(node.right, f, memo), node.k)
    memo[id(node)] = out
    return out


@dataclass(frozen=True)
class InvariantChain:
    """A named transvectant tree with its declared degree and order for ``n``-ics."""

    name: str
    n: int
    expr: str
    degree: int
    order: int
    root: Node

    def __post_init__(self):
        got = shape(self.root, self.n)
        if got != (self.degree, self.order):
            raise ValueError(
                f"{self.name}: declared (degree, order) = {(self.degree, self.order)} but tree gives {got}"
            )

    @property
    def is_invariant(self) -> bool:
        return self.order == 0

    @classmethod
    def build(
        cls, name: str, n: int, expr: str, degree: int, order: int = 0, env: Mapping[str, str] | None = None
    ) -> InvariantChain:
        return cls(name, n, expr, degree, order, parse_chain(expr, env))


def evaluate_chain(chain: InvariantChain, f: BinaryForm) -> BinaryForm:
    """Evaluate ``chain`` on ``f``; invariants come back as order-0 forms (see ``.value``)."""
    if f.n != chain.n:
        raise ValueError(f"chain {chain.name} is for degree {chain.n} forms, got degree {f.n}")
    return evaluate(chain.root, f)


# --- parser ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, env: Mapping[str, Node]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.env = env
        self.text = text

    def error(self, msg: str) -> ValueError:
        return ValueError(f"cannot parse chain {self.text!r}: {msg}")

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise self.error(f"expected {expected or 'a token'}, found {tok}")
        self.pos += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise self.error(f"expected an integer, found {tok}")
        return int(tok)

    def parse(self) -> Node:
        node = self.product()
        if self.peek() is not None:
            raise self.error(f"unexpected trailing {self.peek()}")
        return node

    def product(self) -> Node:
        factor = Fraction(1)
        node: Node | None = None
        while True:
            tok = self.peek()
            if tok is not None and tok[0].isdigit():
                factor *= Fraction(self.take())
            else:
                item = self.power()
                node = item if node is None else Transvect(node, item, 0)
            if self.peek() != "*":
                break
            self.take("*")
        if node is None:
            raise self.error("a chain needs at least one form")
        return node if factor == 1 else Scale(factor, node)

    def power(self) -> Node:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            e = self.integer()
            if e < 1:
                raise self.error("exponent must be positive")
            out = base
            for _ in range(e - 1):
                out = Transvect(out, base, 0)
            return out
        return base

    def atom(self) -> Node:
        tok = self.take()
        if tok == "(":
            first = self.product()
            if self.peek() == ",":
                self.take(",")
                second = self.product()
                self.take(")")
                self.take("_")
                return Transvect(first, second, self.integer())
            self.take(")")
            return first
        if tok == "f":
            return GROUND
        if tok in self.env:
            return self.env[tok]
        raise self.error(f"unknown name {tok}")


def parse_chain(text: str, env: Mapping[str, str] | None = None) -> Node:
    """Parse an expression; ``env`` maps names to expressions (resolved in order)."""
    bound: dict[str, Node] = {}
    for name, expr in (env or {}).items():
        bound[name] = _Parser(expr, bound).parse()
    return _Parser(text, bound).parse()
