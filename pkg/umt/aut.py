"""
Automorphism groups, orbit partitions and isomorphism codes.

On a finite structure the sets definable without constants are exactly the
unions of automorphism orbits, so everything here serves as the exact
oracle behind the scheme checks.
"""

import random
from itertools import combinations, permutations
from math import factorial
from typing import List, Sequence, Tuple

import numpy as np

from . import config
from .errors import *
from .structure import Structure

Perm = Tuple[int, ...]

TUPLES = "tuples"
SUBSETS = "subsets"


def compose(g: Perm, h: Perm) -> Perm:
    """
    ``g ∘ h``: apply h first.
    """
    return tuple(g[i] for i in h)


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, e in enumerate(g):
        out[e] = i
    return tuple(out)


class AutGroup:
    """
    Automorphisms of one structure, sorted lexicographically.
    """
    universe_size: int
    permutations: Tuple[Perm, ...]

    def __init__(self, universe_size: int, perms: Sequence[Perm]) -> None:
        self.universe_size = universe_size
        self.permutations = tuple(sorted(perms))
        self._set = frozenset(self.permutations)

    @property
    def order(self) -> int:
        return len(self.permutations)

    @property
    def identity(self) -> Perm:
        return tuple(range(self.universe_size))

    def __contains__(self, g) -> bool:
        return tuple(g) in self._set

    def __iter__(self):
        return iter(self.permutations)

    def __len__(self) -> int:
        return self.order

    def image(self, g: Perm, item: Tuple[int, ...], kind: str):
        if kind == SUBSETS:
            return tuple(sorted(g[e] for e in item))
        return tuple(g[e] for e in item)

    def orbit(self, item: Tuple[int, ...], kind: str = TUPLES):
        return sorted({self.image(g, item, kind) for g in self.permutations})

    def verify(self, sample: int = 2000, seed: int = 0) -> bool:
        """
        Identity, inverses and closure. Closure is checked on every pair for
        small groups, on ``sample`` seeded random pairs otherwise.
        """
        if self.identity not in self:
            return False
        if any(inverse(g) not in self for g in self.permutations):
            return False
        if self.order ** 2 <= sample:
            pairs = ((g, h) for g in self.permutations for h in self.permutations)
        else:
            rng = random.Random(seed)
            pairs = ((rng.choice(self.permutations),
                rng.choice(self.permutations)) for _ in range(sample))
        return all(compose(g, h) in self for g, h in pairs)

    def is_rigid(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"AutGroup(universe {self.universe_size}, order {self.order})"


class OrbitPartition:
    """
    Orbits of the group action on distinct-entry k-tuples or k-subsets.
    Classes are ordered by their least member.
    """
    kind: str
    k: int
    classes: List[Tuple[Tuple[int, ...], ...]]
    group_order: int

    def __init__(self, kind: str, k: int,
            classes: List[Tuple[Tuple[int, ...], ...]], group_order: int):
        self.kind = kind
        self.k = k
        self.classes = classes
        self.group_order = group_order

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, item) -> int:
        item = tuple(item)
        for i, cls in enumerate(self.classes):
            if item in cls:
                return i
        raise KeyError(item)

    def lagrange(self) -> bool:
        """
        Every class size divides the group order.
        """
        return all(self.group_order % len(c) == 0 for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "group_order": self.group_order,
            "classes": [[list(t) for t in c] for c in self.classes],
        }


def _consistent(arrays, dom, img) -> bool:
    for arr in arrays:
        k = arr.ndim
        if not np.array_equal(arr[np.ix_(*[dom] * k)], arr[np.ix_(*[img] * k)]):
            return False
    return True


def automorphism_group(s: Structure) -> AutGroup:
    """
    Backtracking over images of ``0, 1, ...``; a partial map survives only
    while it preserves every relation on the elements mapped so far.
    """
    n = s.universe_size
    limit = config.current().limits.aut_universe.value()
    if n > limit:
        raise AutLimitExceeded(f"Universe {n} exceeds the automorphism "
            f"limit {limit}.")

    arrays = [s.array(name) for name in s.relations]
    found = []
    image = []
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(image))
            return
        dom = list(range(i+1))
        for v in range(n):
            if used[v]:
                continue
            image.append(v)
            if _consistent(arrays, dom, image):
                used[v] = True
                extend(i+1)
                used[v] = False
            image.pop()

    extend(0)
    return AutGroup(n, found)


def _items(n: int, k: int, kind: str):
    if kind == SUBSETS:
        return combinations(range(n), k)
    if kind == TUPLES:
        return permutations(range(n), k)
    raise BadMode(f"Unknown orbit kind {kind!r}, use tuples or subsets.")


def orbits(s: Structure, k: int, kind: str = SUBSETS,
        group: AutGroup = None) -> OrbitPartition:
    """
    Orbit partition of the distinct-entry k-tuples or k-subsets, closed from
    the lexicographically least unvisited item.

    :param group: Reuse an already computed group of s.
    """
    if k < 0:
        raise BadLevel(f"Orbit size {k} must be non-negative.")
    items = list(_items(s.universe_size, k, kind))
    if group is None:
        group = automorphism_group(s)

    classes = []
    seen = set()
    for item in items:
        if item in seen:
            continue
        cls = tuple(group.orbit(item, kind))
        seen.update(cls)
        classes.append(cls)

    part = OrbitPartition(kind, k, classes, group.order)
    assert part.lagrange()
    return part


def is_n_homogeneous(s: Structure, n: int, group: AutGroup = None) -> bool:
    """
    The group is transitive on n-subsets; vacuous when n exceeds the
    universe.
    """
    if n < 1:
        raise BadLevel(f"Level {n} must be at least 1.")
    if n >= s.universe_size:
        # at most one n-subset
        return True
    return len(orbits(s, n, SUBSETS, group)) == 1


def point_orbits(s: Structure, group: AutGroup = None) -> List[Tuple[int, ...]]:
    """
    Orbits on elements, as sorted tuples.
    """
    part = orbits(s, 1, SUBSETS, group)
    return [tuple(t[0] for t in cls) for cls in part.classes]


def _code(arrays: Sequence[np.ndarray], order: Sequence[int]) -> int:
    """
    Bit code of the structure relabelled so that new element i is old
    element ``order[i]``. Bit i of each relation is its i-th tuple in
    lexicographic order; relations follow signature order.
    """
    order = list(order)
    code = 0
    shift = 0
    for arr in arrays:
        block = arr[np.ix_(*[order] * arr.ndim)].ravel()
        bits = np.packbits(block.astype(np.uint8), bitorder="little")
        code |= int.from_bytes(bits.tobytes(), "little") << shift
        shift += len(block)
    return code


def structure_code(s: Structure) -> int:
    """
    Bit code of s as labelled.
    """
    arrays = [s.array(name) for name in s.relations]
    return _code(arrays, range(s.universe_size))


def canonical_code(s: Structure) -> int:
    """
    Minimum code over every relabelling. Isomorphic structures (same
    signature) have equal canonical codes.
    """
    arrays = [s.array(name) for name in s.relations]
    return min(_code(arrays, p) for p in permutations(range(s.universe_size)))


def subset_types_uniform(s: Structure, k: int) -> bool:
    """
    All k-subsets induce isomorphic substructures. Necessary for the group
    to be transitive on k-subsets.
    """
    n = s.universe_size
    if k >= n:
        return True
    arrays = [s.array(name) for name in s.relations]
    codes = set()
    for sub in combinations(range(n), k):
        codes.add(min(_code(arrays, p) for p in permutations(sub)))
        if len(codes) > 1:
            return False
    return True


def count_isomorphic_copies(s: Structure, group: AutGroup = None) -> int:
    """
    Number of distinct labelled structures isomorphic to s: ``n! / |Aut|``.
    """
    if group is None:
        group = automorphism_group(s)
    return factorial(s.universe_size) // group.order
