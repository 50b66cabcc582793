"""
Quantification modes of the scheme checks.
"""

import re
from typing import Optional, Union

from ..errors import *

DEFAULT_DEPTH = 2


class Mode:
    """
    ``formulas:D`` quantifies over enumerated formulas up to depth D,
    ``orbits`` over automorphism invariant sets (all definable sets),
    ``subsets`` over arbitrary sets of elements.
    """
    FORMULAS = "formulas"
    ORBITS = "orbits"
    SUBSETS = "subsets"

    kind: str
    depth: Optional[int]

    def __init__(self, kind: str, depth: Optional[int] = None) -> None:
        if kind not in (self.FORMULAS, self.ORBITS, self.SUBSETS):
            raise BadMode(f"Unknown mode {kind!r}.")
        if kind == self.FORMULAS:
            depth = DEFAULT_DEPTH if depth is None else depth
        elif depth is not None:
            raise BadMode(f"Mode {kind} takes no depth.")
        self.kind = kind
        self.depth = depth

    @classmethod
    def parse(cls, text: Union[str, "Mode"]) -> "Mode":
        """
        ``"orbits"``, ``"subsets"``, ``"formulas"`` or ``"formulas:3"``.
        """
        if isinstance(text, Mode):
            return text
        m = re.fullmatch(r"\s*(orbits|subsets|formulas)(?::(\d+))?\s*", text)
        if m is None:
            raise BadMode(f"Cannot parse mode {text!r}; use orbits, subsets "
                "or formulas:D.")
        depth = int(m.group(2)) if m.group(2) is not None else None
        return cls(m.group(1), depth)

    @property
    def formulas(self) -> bool:
        return self.kind == self.FORMULAS

    @property
    def orbits(self) -> bool:
        return self.kind == self.ORBITS

    @property
    def subsets(self) -> bool:
        return self.kind == self.SUBSETS

    def __eq__(self, other):
        return isinstance(other, Mode) and self.kind == other.kind \
            and self.depth == other.depth

    def __hash__(self):
        return hash((self.kind, self.depth))

    def __str__(self) -> str:
        if self.formulas:
            return f"{self.kind}:{self.depth}"
        return self.kind

    def __repr__(self) -> str:
        return f"Mode({self})"
