"""
Formula syntax tree.

Nodes are frozen dataclasses, so formulas are immutable and hashable.
``str(f)`` gives DSL text that ``parse_formula`` reads back.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Mapping, Tuple

__all__ = (
    "Formula",
    "Eq",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Quantified",
    "Forall",
    "Exists",
    "ExistsUnique",
)


@dataclass(frozen=True)
class Formula:
    """
    Base class. ``free`` and ``text`` are computed once per node.
    """

    @cached_property
    def free(self) -> FrozenSet[str]:
        return self._free()

    def free_vars(self) -> FrozenSet[str]:
        return self.free

    @cached_property
    def text(self) -> str:
        return self._text()

    def __str__(self) -> str:
        return self.text

    def _free(self) -> FrozenSet[str]:
        raise NotImplementedError

    def _text(self) -> str:
        raise NotImplementedError

    def nested(self) -> str:
        """
        Text for use as an operand: compound formulas get parentheses.
        """
        return self.text


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str

    def _free(self):
        return frozenset((self.left, self.right))

    def _text(self):
        return f"{self.left}={self.right}"


@dataclass(frozen=True)
class Atom(Formula):
    rel: str
    args: Tuple[str, ...]

    def _free(self):
        return frozenset(self.args)

    def _text(self):
        return f"{self.rel}({','.join(self.args)})"


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def _free(self):
        return self.body.free

    def _text(self):
        if isinstance(self.body, Eq):
            return f"{self.body.left}!={self.body.right}"
        return "!" + self.body.nested()


@dataclass(frozen=True)
class _Junction(Formula):
    items: Tuple[Formula, ...]
    symbol = ""

    def __post_init__(self):
        assert len(self.items) >= 2

    def _free(self):
        return frozenset().union(*(f.free for f in self.items))

    def _text(self):
        return f" {self.symbol} ".join(f.nested() for f in self.items)

    def nested(self):
        return f"({self.text})"


@dataclass(frozen=True)
class And(_Junction):
    symbol = "&"


@dataclass(frozen=True)
class Or(_Junction):
    symbol = "|"


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula
    symbol = ""

    def _free(self):
        return self.left.free | self.right.free

    def _text(self):
        return f"{self.left.nested()} {self.symbol} {self.right.nested()}"

    def nested(self):
        return f"({self.text})"


@dataclass(frozen=True)
class Implies(_Binary):
    symbol = "->"


@dataclass(frozen=True)
class Iff(_Binary):
    symbol = "<->"


@dataclass(frozen=True)
class Quantified(Formula):
    var: str
    body: Formula
    keyword = ""

    def _free(self):
        return self.body.free - {self.var}

    def _text(self):
        return f"{self.keyword} {self.var}. {self.body.text}"

    def nested(self):
        return f"({self.text})"


@dataclass(frozen=True)
class Forall(Quantified):
    keyword = "forall"


@dataclass(frozen=True)
class Exists(Quantified):
    keyword = "exists"


@dataclass(frozen=True)
class ExistsUnique(Quantified):
    """
    Exactly one witness.
    """
    keyword = "existsu"


def variables(f: Formula) -> FrozenSet[str]:
    """
    Every variable name occurring in f, free or bound.
    """
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, Atom):
        return frozenset(f.args)
    if isinstance(f, Not):
        return variables(f.body)
    if isinstance(f, _Junction):
        return frozenset().union(*(variables(g) for g in f.items))
    if isinstance(f, _Binary):
        return variables(f.left) | variables(f.right)
    if isinstance(f, Quantified):
        return variables(f.body) | {f.var}
    raise TypeError(f"Not a formula: {f!r}")


def fresh_name(base: str, taken) -> str:
    """
    ``base_1``, ``base_2``, ... whichever is first not in taken.
    """
    i = 1
    while f"{base}_{i}" in taken:
        i += 1
    return f"{base}_{i}"


def substitute(f: Formula, mapping: Mapping[str, str]) -> Formula:
    """
    Simultaneously rename free variables. Bound variables that would capture
    a new name are renamed first.
    """
    if not mapping:
        return f
    if isinstance(f, Eq):
        return Eq(mapping.get(f.left, f.left), mapping.get(f.right, f.right))
    if isinstance(f, Atom):
        return Atom(f.rel, tuple(mapping.get(a, a) for a in f.args))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping))
    if isinstance(f, _Junction):
        return type(f)(tuple(substitute(g, mapping) for g in f.items))
    if isinstance(f, _Binary):
        return type(f)(substitute(f.left, mapping),
            substitute(f.right, mapping))
    if isinstance(f, Quantified):
        inner = {k: v for k, v in mapping.items()
            if k != f.var and k in f.body.free}
        var, body = f.var, f.body
        if var in inner.values():
            taken = variables(body) | set(inner) | set(inner.values())
            new = fresh_name(var, taken)
            body = substitute(body, {var: new})
            var = new
        return type(f)(var, substitute(body, inner))
    raise TypeError(f"Not a formula: {f!r}")


def canonical(f: Formula, _depth: int = 0) -> Formula:
    """
    Alpha-normal form: bound variables renamed ``#1, #2, ...`` by nesting
    depth. Alpha-equivalent formulas have equal canonical forms.
    """
    if isinstance(f, (Eq, Atom)):
        return f
    if isinstance(f, Not):
        return Not(canonical(f.body, _depth))
    if isinstance(f, _Junction):
        return type(f)(tuple(canonical(g, _depth) for g in f.items))
    if isinstance(f, _Binary):
        return type(f)(canonical(f.left, _depth), canonical(f.right, _depth))
    if isinstance(f, Quantified):
        name = f"#{_depth+1}"
        body = substitute(f.body, {f.var: name})
        return type(f)(name, canonical(body, _depth+1))
    raise TypeError(f"Not a formula: {f!r}")


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    return canonical(f) == canonical(g)


def free_order(f: Formula) -> Tuple[str, ...]:
    """
    Free variables in order of first occurrence, left to right.
    """
    out = []

    def visit(g, bound):
        if isinstance(g, Eq):
            names = (g.left, g.right)
        elif isinstance(g, Atom):
            names = g.args
        elif isinstance(g, Not):
            return visit(g.body, bound)
        elif isinstance(g, _Junction):
            for h in g.items:
                visit(h, bound)
            return
        elif isinstance(g, _Binary):
            visit(g.left, bound)
            visit(g.right, bound)
            return
        else:
            return visit(g.body, bound | {g.var})
        for v in names:
            if v not in bound and v not in out:
                out.append(v)

    visit(f, frozenset())
    return tuple(out)
