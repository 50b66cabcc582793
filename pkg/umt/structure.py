"""
Finite relational structures.

Elements are anonymous indices ``0..n-1``. Tables use set semantics and
iterate in lexicographic order, so every output is reproducible.
"""

import re
from itertools import product
from typing import Iterable, Mapping, Sequence, Tuple

import numpy as np

from . import config
from .errors import *

NAME_PAT = r"[A-Za-z][A-Za-z0-9_]*"
NAME_RE = re.compile(NAME_PAT)


class RelationTable:
    """
    One named relation: a set of element tuples of fixed arity.
    """
    name: str
    arity: int
    tuples: Tuple[Tuple[int, ...], ...]

    def __init__(self, name: str, arity: int,
            tuples: Iterable[Sequence[int]] = ()) -> None:
        """
        :param tuples: Any iterable of tuples; duplicates are dropped.
        """
        if arity < 1:
            raise ArityMismatch(f"Relation {name} must have positive arity.")
        rows = set()
        for t in tuples:
            t = tuple(int(e) for e in t)
            if len(t) != arity:
                raise ArityMismatch(f"Tuple {t} in {name}/{arity} has "
                    f"length {len(t)}.")
            rows.add(t)

        self.name = name
        self.arity = arity
        self.tuples = tuple(sorted(rows))
        self._set = frozenset(rows)

    @classmethod
    def from_array(cls, name: str, arr: np.ndarray) -> "RelationTable":
        """
        Table from a boolean array of shape ``(n,) * arity``.
        """
        return cls(name, arr.ndim, map(tuple, np.argwhere(arr)))

    def to_array(self, n: int) -> np.ndarray:
        """
        Boolean array of shape ``(n,) * arity``.
        """
        arr = np.zeros((n,) * self.arity, dtype=bool)
        if self.tuples:
            arr[tuple(np.array(self.tuples).T)] = True
        return arr

    def renamed(self, name: str) -> "RelationTable":
        return RelationTable(name, self.arity, self.tuples)

    def __contains__(self, t) -> bool:
        return tuple(t) in self._set

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __eq__(self, other):
        return isinstance(other, RelationTable) and self.name == other.name \
            and self.arity == other.arity and self._set == other._set

    def __hash__(self):
        return hash((self.name, self.arity, self._set))

    def __repr__(self) -> str:
        return f"RelationTable({self.name}/{self.arity}, {len(self)} tuples)"


class Structure:
    """
    Finite universe plus named relation tables.

    Immutable after construction; relations iterate sorted by name.
    """
    universe_size: int
    relations: Mapping[str, RelationTable]

    def __init__(self, universe_size: int,
            relations: Iterable[RelationTable] = ()) -> None:
        limit = config.current().limits.structure_universe.value()
        if universe_size < 0:
            raise OutOfRange("Universe size must be non-negative.")
        if universe_size > limit:
            raise OutOfRange(f"Universe {universe_size} exceeds the "
                f"structure limit {limit}.")

        tables = {}
        for table in relations:
            if table.name in tables:
                raise DuplicateRelation(f"Relation {table.name} declared twice.")
            for t in table:
                for e in t:
                    if not 0 <= e < universe_size:
                        raise OutOfRange(f"Element {e} in {table.name} is not "
                            f"in [0, {universe_size}).")
            tables[table.name] = table

        self.universe_size = universe_size
        self.relations = {k: tables[k] for k in sorted(tables)}
        self._arrays = {}

    @property
    def arity_profile(self) -> Tuple[int, ...]:
        """
        Sorted multiset of the arities present.
        """
        return tuple(sorted(t.arity for t in self.relations.values()))

    @property
    def signature(self) -> Tuple[Tuple[str, int], ...]:
        return tuple((k, t.arity) for k, t in self.relations.items())

    @property
    def elements(self) -> range:
        return range(self.universe_size)

    def table(self, name: str) -> RelationTable:
        try:
            return self.relations[name]
        except KeyError:
            raise UnknownRelation(f"No relation named {name}.") from None

    def array(self, name: str) -> np.ndarray:
        """
        Boolean array of a relation, cached. Do not modify it.
        """
        if name not in self._arrays:
            arr = self.table(name).to_array(self.universe_size)
            arr.setflags(write=False)
            self._arrays[name] = arr
        return self._arrays[name]

    def binary(self, name: str) -> np.ndarray:
        """
        Like ``array`` but the relation must be binary.
        """
        if self.table(name).arity != 2:
            raise NonBinaryOperand(f"Relation {name} is not binary.")
        return self.array(name)

    def with_relation(self, table: RelationTable) -> "Structure":
        """
        Copy with one relation added or replaced.
        """
        rels = dict(self.relations)
        rels[table.name] = table
        return Structure(self.universe_size, rels.values())

    def __eq__(self, other):
        return isinstance(other, Structure) \
            and self.universe_size == other.universe_size \
            and self.relations == other.relations

    def __hash__(self):
        return hash((self.universe_size, tuple(self.relations.values())))

    def __repr__(self) -> str:
        rels = ", ".join(f"{t.name}/{t.arity}:{len(t)}"
            for t in self.relations.values())
        return f"Structure({self.universe_size}, {{{rels}}})"


_UNIVERSE_RE = re.compile(r"universe\s+(\d+)")
_REL_RE = re.compile(r"rel\s+(" + NAME_PAT + r")\s*/\s*(\d+)\s*=(.*)")
_TUPLE_RE = re.compile(r"\(([^()]*)\)")


def parse_structure(text: str) -> Structure:
    """
    Parse ``.fms`` text.

    .. code-block:: text

        universe 3
        # strict chain
        rel R/2 = (0,1),(0,2),(1,2)
    """
    universe = None
    tables = []
    names = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if universe is None:
            m = _UNIVERSE_RE.fullmatch(line)
            if m is None:
                raise StructureSyntaxError("expected 'universe <n>'", lineno)
            universe = int(m.group(1))
            continue

        m = _REL_RE.fullmatch(line)
        if m is None:
            raise StructureSyntaxError(f"cannot parse {line!r}", lineno)
        name, arity, body = m.group(1), int(m.group(2)), m.group(3)
        if name in names:
            raise DuplicateRelation(f"line {lineno}: relation {name} "
                "declared twice.")
        names.add(name)
        if arity < 1:
            raise StructureSyntaxError("arity must be positive", lineno)

        tuples = []
        rest = _TUPLE_RE.sub("", body)
        if rest.replace(",", "").strip():
            raise StructureSyntaxError(f"stray text {rest.strip()!r}", lineno)
        for group in _TUPLE_RE.findall(body):
            parts = [p.strip() for p in group.split(",")]
            if not all(p.isdigit() for p in parts):
                raise StructureSyntaxError(f"bad tuple ({group})", lineno)
            t = tuple(int(p) for p in parts)
            if len(t) != arity:
                raise ArityMismatch(f"line {lineno}: tuple {t} has length "
                    f"{len(t)}, {name} has arity {arity}.")
            for e in t:
                if e >= universe:
                    raise OutOfRange(f"line {lineno}: element {e} is not in "
                        f"[0, {universe}).")
            tuples.append(t)
        tables.append(RelationTable(name, arity, tuples))

    if universe is None:
        raise StructureSyntaxError("missing 'universe <n>'", 1)
    return Structure(universe, tables)


def load_structure(path) -> Structure:
    with open(path, "r", encoding="utf-8") as fp:
        return parse_structure(fp.read())


def format_structure(s: Structure) -> str:
    """
    Canonical ``.fms`` text; parses back to an equal structure.
    """
    lines = [f"universe {s.universe_size}"]
    for t in s.relations.values():
        body = ",".join("(" + ",".join(map(str, row)) + ")" for row in t)
        lines.append(f"rel {t.name}/{t.arity} = {body}".rstrip())
    return "\n".join(lines) + "\n"


def transitive_closure(s: Structure, rel: str) -> RelationTable:
    """
    Smallest transitive superset of a binary relation (Warshall).
    """
    m = s.binary(rel).copy()
    for k in range(s.universe_size):
        m |= np.outer(m[:, k], m[k, :])
    return RelationTable.from_array(rel + "_plus", m)


def induced_substructure(s: Structure, subset: Iterable[int]) -> Structure:
    """
    Restrict to ``subset``, re-indexed ``0..k-1`` in increasing order.
    """
    keep = sorted(set(subset))
    for e in keep:
        if not 0 <= e < s.universe_size:
            raise OutOfRange(f"Element {e} is not in [0, {s.universe_size}).")
    index = {e: i for i, e in enumerate(keep)}

    tables = []
    for t in s.relations.values():
        rows = [tuple(index[e] for e in row) for row in t
            if all(e in index for e in row)]
        tables.append(RelationTable(t.name, t.arity, rows))
    return Structure(len(keep), tables)


def permute_structure(s: Structure, perm: Sequence[int]) -> Structure:
    """
    Image of ``s`` under the element map ``i -> perm[i]``.
    """
    assert sorted(perm) == list(range(s.universe_size))
    tables = [RelationTable(t.name, t.arity,
        (tuple(perm[e] for e in row) for row in t))
        for t in s.relations.values()]
    return Structure(s.universe_size, tables)


def all_tuples(n: int, arity: int):
    """
    Every tuple over ``range(n)`` in lexicographic order.
    """
    return product(range(n), repeat=arity)
