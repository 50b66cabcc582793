"""
Formula definition files (``.fml``).

.. code-block:: text

    # strict part of rho
    P(x,y) := rho(x,y) & x != y
    pl(x,y) := P(x,y) & exists z. P(x,z) & P(z,y)

Each definition may use the ones above it like a relation; uses are
expanded in place, so every stored formula mentions structure relations
only.
"""

import re
from typing import Dict, Mapping, Optional, Tuple

from ..errors import *
from .ast import *
from .ast import substitute
from .parser import freshen, parse_formula

_DEF_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*(?:\(([^()]*)\))?\s*:=(.*)")


class Definition:
    """
    A named formula with an ordered parameter list.
    """
    name: str
    params: Tuple[str, ...]
    formula: Formula

    def __init__(self, name: str, params: Tuple[str, ...],
            formula: Formula) -> None:
        self.name = name
        self.params = params
        self.formula = formula

    def apply(self, args: Tuple[str, ...]) -> Formula:
        if len(args) != len(self.params):
            raise ArityMismatch(f"{self.name} takes {len(self.params)} "
                f"arguments, got {len(args)}.")
        return substitute(self.formula, dict(zip(self.params, args)))

    def __repr__(self) -> str:
        return f"{self.name}({','.join(self.params)}) := {self.formula}"


def expand(f: Formula, defs: Mapping[str, Definition]) -> Formula:
    """
    Replace every atom naming a definition by its body.
    """
    if isinstance(f, Eq):
        return f
    if isinstance(f, Atom):
        if f.rel in defs:
            return defs[f.rel].apply(f.args)
        return f
    if isinstance(f, Not):
        return Not(expand(f.body, defs))
    if isinstance(f, (And, Or)):
        return type(f)(tuple(expand(g, defs) for g in f.items))
    if isinstance(f, (Implies, Iff)):
        return type(f)(expand(f.left, defs), expand(f.right, defs))
    return type(f)(f.var, expand(f.body, defs))


def parse_definitions(text: str,
        signature: Optional[Mapping[str, int]] = None) -> Dict[str, Definition]:
    """
    Parse definition lines in order. Returns ``{name: Definition}`` in file
    order.

    :param signature: Checked after expansion, when given.
    """
    defs: Dict[str, Definition] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DEF_RE.fullmatch(line)
        if m is None:
            raise FormulaSyntaxError(f"line {lineno}: expected "
                "'name(vars) := formula'")

        name, params, body = m.group(1), m.group(2), m.group(3)
        params = tuple(p.strip() for p in params.split(",")) if params else ()
        if len(set(params)) != len(params):
            raise FormulaSyntaxError(f"line {lineno}: repeated parameter "
                f"in {name}")
        if name in defs:
            raise DuplicateRelation(f"line {lineno}: {name} defined twice.")

        try:
            f = parse_formula(body)
        except FormulaSyntaxError as e:
            raise type(e)(f"line {lineno}: {e}") from None
        f = freshen(expand(f, defs))

        extra = f.free - set(params)
        if extra:
            raise UnboundVariable(f"line {lineno}: {', '.join(sorted(extra))} "
                f"not among the parameters of {name}.")
        if signature is not None:
            parse_formula(f.text, signature)
        defs[name] = Definition(name, params, f)
    return defs


def load_definitions(path, signature=None) -> Dict[str, Definition]:
    with open(path, "r", encoding="utf-8") as fp:
        return parse_definitions(fp.read(), signature)
