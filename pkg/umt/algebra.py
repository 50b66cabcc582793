"""
Relation algebra expressions.

Grammar, loosest first:

.. code-block:: text

    expr    := meet (("|" | "-") meet)*
    meet    := comp ("&" comp)*
    comp    := prefix (("∘" | ";") prefix)*
    prefix  := "~" prefix | postfix
    postfix := primary ("^-1")*
    primary := name | "diag" | "full" | "(" expr ")"
             | ("complement" | "converse") "(" expr ")"

Every table is evaluated as a boolean numpy array of shape ``(n,) * arity``.
"""

import re
from typing import List, Tuple

import numpy as np

from .errors import *
from .structure import RelationTable, Structure

_TOKEN_RE = re.compile(r"\s*(\^-1|∘|[;|&~()\-]|[A-Za-z][A-Za-z0-9_]*)")


def _tokenize(expr: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(expr):
        if expr[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(expr, pos)
        if m is None:
            raise StructureSyntaxError(f"unexpected {expr[pos:].strip()[:10]!r} "
                f"in relation expression at position {pos}")
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Evaluator:
    """
    Recursive descent parser that evaluates while parsing.
    """

    def __init__(self, s: Structure, expr: str):
        self.s = s
        self.n = s.universe_size
        self.tokens = _tokenize(expr)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "an operand"
            raise StructureSyntaxError(f"expected {want!r}, got {tok!r}")
        self.i += 1
        return tok

    def run(self) -> np.ndarray:
        arr = self.expr()
        if self.peek() is not None:
            raise StructureSyntaxError(f"unexpected {self.peek()!r}")
        return arr

    def expr(self):
        arr = self.meet()
        while self.peek() in ("|", "-"):
            op = self.take()
            rhs = self.meet()
            _same_arity(arr, rhs, op)
            arr = arr | rhs if op == "|" else arr & ~rhs
        return arr

    def meet(self):
        arr = self.comp()
        while self.peek() == "&":
            self.take()
            rhs = self.comp()
            _same_arity(arr, rhs, "&")
            arr = arr & rhs
        return arr

    def comp(self):
        arr = self.prefix()
        while self.peek() in ("∘", ";"):
            self.take()
            arr = compose(arr, self.prefix())
        return arr

    def prefix(self):
        if self.peek() == "~":
            self.take()
            return ~self.prefix()
        return self.postfix()

    def postfix(self):
        arr = self.primary()
        while self.peek() == "^-1":
            self.take()
            arr = converse(arr)
        return arr

    def primary(self):
        tok = self.take()
        if tok == "(":
            arr = self.expr()
            self.take(")")
            return arr
        if tok in ("complement", "converse") and self.peek() == "(":
            self.take("(")
            arr = self.expr()
            self.take(")")
            return ~arr if tok == "complement" else converse(arr)
        if tok == "diag":
            return np.eye(self.n, dtype=bool)
        if tok == "full":
            return np.ones((self.n, self.n), dtype=bool)
        if tok[0].isalpha():
            return self.s.array(tok).copy()
        raise StructureSyntaxError(f"unexpected {tok!r}")


def _same_arity(a, b, op):
    if a.ndim != b.ndim:
        raise ArityMismatch(f"Operands of {op!r} have arities {a.ndim} "
            f"and {b.ndim}.")


def converse(a: np.ndarray) -> np.ndarray:
    if a.ndim != 2:
        raise NonBinaryOperand("Converse needs a binary relation.")
    return a.T.copy()


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    ``{(x,z) | exists y: a(x,y) and b(y,z)}``.
    """
    if a.ndim != 2 or b.ndim != 2:
        raise NonBinaryOperand("Composition needs binary relations.")
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def relation_algebra(s: Structure, expr: str,
        name: str = "result") -> RelationTable:
    """
    Evaluate a relation expression over ``s``.

    .. code-block:: py

        relation_algebra(l3, "R ∘ R")               # {(0, 2)}
        relation_algebra(l3, "complement(diag)")    # off-diagonal pairs
    """
    arr = _Evaluator(s, expr).run()
    return RelationTable.from_array(name, arr)
