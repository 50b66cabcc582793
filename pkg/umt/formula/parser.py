"""
Formula DSL parser.

.. code-block:: text

    formula := iff
    iff     := impl ("<->" impl)*
    impl    := junct ("->" impl)?
    junct   := unary (("&" unary)* | ("|" unary)*)
    unary   := "!" unary | atom | quant | "(" formula ")"
    quant   := ("forall" | "exists" | "existsu") var "." formula
    atom    := name "(" var ("," var)* ")" | var "=" var | var "!=" var

``&`` and ``|`` have equal strength, so mixing them without parentheses is
an error rather than a guess.
"""

import re
from typing import List, Mapping, Optional, Tuple

from ..errors import *
from .ast import *
from .ast import fresh_name, substitute, variables

KEYWORDS = ("forall", "exists", "existsu")

_TOKEN_RE = re.compile(r"<->|->|!=|[A-Za-z_][A-Za-z0-9_]*|[()!&|.,=]")

_QUANTIFIERS = {
    "forall": Forall,
    "exists": Exists,
    "existsu": ExistsUnique,
}


def tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    return tokens


class Parser:
    """
    Recursive descent over the token list.
    """

    def __init__(self, text: str,
            signature: Optional[Mapping[str, int]] = None):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.signature = signature

    def peek(self, offset: int = 0) -> Optional[str]:
        j = self.i + offset
        return self.tokens[j][0] if j < len(self.tokens) else None

    def pos(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return len(self.text)

    def take(self, expected: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None:
            want = f"{expected!r}" if expected else "more input"
            raise FormulaSyntaxError(f"expected {want}, got end of input",
                self.pos())
        if expected is not None and tok != expected:
            raise FormulaSyntaxError(f"expected {expected!r}, got {tok!r}",
                self.pos())
        self.i += 1
        return tok

    def variable(self) -> str:
        pos = self.pos()
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) or tok in KEYWORDS:
            raise FormulaSyntaxError(f"expected a variable, got {tok!r}", pos)
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() is not None:
            raise FormulaSyntaxError(f"unexpected {self.peek()!r}", self.pos())
        return f

    def iff(self) -> Formula:
        f = self.impl()
        while self.peek() == "<->":
            self.take()
            f = Iff(f, self.impl())
        return f

    def impl(self) -> Formula:
        f = self.junct()
        if self.peek() == "->":
            self.take()
            return Implies(f, self.impl())
        return f

    def junct(self) -> Formula:
        items = [self.unary()]
        op = None
        while self.peek() in ("&", "|"):
            if op is not None and self.peek() != op:
                raise AmbiguousMix("'&' and '|' mixed without parentheses",
                    self.pos())
            op = self.take()
            items.append(self.unary())
        if op is None:
            return items[0]
        return And(tuple(items)) if op == "&" else Or(tuple(items))

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            f = self.iff()
            self.take(")")
            return f
        if tok in _QUANTIFIERS:
            self.take()
            var = self.variable()
            self.take(".")
            return _QUANTIFIERS[tok](var, self.iff())
        return self.atom()

    def atom(self) -> Formula:
        pos = self.pos()
        name = self.variable()
        if self.peek() == "(":
            self.take()
            args = [self.variable()]
            while self.peek() == ",":
                self.take()
                args.append(self.variable())
            self.take(")")
            self.check_relation(name, len(args), pos)
            return Atom(name, tuple(args))
        if self.peek() == "=":
            self.take()
            return Eq(name, self.variable())
        if self.peek() == "!=":
            self.take()
            return Not(Eq(name, self.variable()))
        raise FormulaSyntaxError(f"expected an atom after {name!r}", pos)

    def check_relation(self, name: str, arity: int, pos: int) -> None:
        if self.signature is None:
            return
        if name not in self.signature:
            raise UnknownRelation(f"No relation named {name} "
                f"(at position {pos}).")
        if self.signature[name] != arity:
            raise ArityMismatch(f"{name} has arity {self.signature[name]}, "
                f"used with {arity} arguments (at position {pos}).")


def freshen(f: Formula) -> Formula:
    """
    Rename bound variables so that no quantifier reuses a name that is free in
    f or bound by an enclosing quantifier.
    """
    taken = set(variables(f))

    def rec(g, outer):
        if isinstance(g, (Eq, Atom)):
            return g
        if isinstance(g, Not):
            return Not(rec(g.body, outer))
        if isinstance(g, (And, Or)):
            return type(g)(tuple(rec(h, outer) for h in g.items))
        if isinstance(g, (Implies, Iff)):
            return type(g)(rec(g.left, outer), rec(g.right, outer))
        var, body = g.var, g.body
        if var in outer:
            new = fresh_name(var, taken)
            taken.add(new)
            body = substitute(body, {var: new})
            var = new
        return type(g)(var, rec(body, outer | {var}))

    return rec(f, frozenset(f.free))


def parse_formula(text: str,
        signature: Optional[Mapping[str, int]] = None) -> Formula:
    """
    Parse DSL text into a Formula.

    :param signature: Optional ``{name: arity}``; relation atoms are checked
        against it.
    """
    return freshen(Parser(text, signature).parse())
