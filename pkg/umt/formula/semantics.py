"""
Formula semantics over finite structures.

``evaluate`` is the plain Tarskian recursion over one environment.
``Evaluator`` computes whole truth tables: every subformula becomes a boolean
array with one axis per free variable (variables sorted by name), and
results are memoised by formula text, so formulas sharing subformulas are
cheap to evaluate in bulk.
"""

from itertools import permutations
from typing import Dict, FrozenSet, Mapping, Sequence, Tuple

import numpy as np

from ..errors import *
from ..structure import Structure
from .ast import *
from .ast import substitute

Table = Tuple[Tuple[str, ...], np.ndarray]


def _atom_table(s: Structure, rel: str, arity: int) -> np.ndarray:
    table = s.table(rel)
    if table.arity != arity:
        raise ArityMismatch(f"{rel} has arity {table.arity}, used with "
            f"{arity} arguments.")
    return s.array(rel)


def evaluate(s: Structure, f: Formula, env: Mapping[str, int]) -> bool:
    """
    Truth of f in s under env. env must cover the free variables of f.
    """
    missing = f.free - set(env)
    if missing:
        raise UnboundVariable(f"No value for {', '.join(sorted(missing))}.")
    size = s.universe_size
    for name, e in env.items():
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)):
            raise OutOfRange(f"{name}={e!r} is not an element index.")
        if not 0 <= e < size:
            raise OutOfRange(f"{name}={e} is not in [0, {size}).")
    return _eval(s, f, {name: int(e) for name, e in env.items()})


def _eval(s: Structure, f: Formula, env: Dict[str, int]) -> bool:
    if isinstance(f, Eq):
        return env[f.left] == env[f.right]
    if isinstance(f, Atom):
        arr = _atom_table(s, f.rel, len(f.args))
        return bool(arr[tuple(env[a] for a in f.args)])
    if isinstance(f, Not):
        return not _eval(s, f.body, env)
    if isinstance(f, And):
        return all(_eval(s, g, env) for g in f.items)
    if isinstance(f, Or):
        return any(_eval(s, g, env) for g in f.items)
    if isinstance(f, Implies):
        return not _eval(s, f.left, env) or _eval(s, f.right, env)
    if isinstance(f, Iff):
        return _eval(s, f.left, env) == _eval(s, f.right, env)

    hits = 0
    for e in s.elements:
        if _eval(s, f.body, {**env, f.var: e}):
            hits += 1
            if isinstance(f, Exists):
                return True
        elif isinstance(f, Forall):
            return False
    if isinstance(f, Forall):
        return True
    if isinstance(f, Exists):
        return False
    return hits == 1


class Evaluator:
    """
    Memoising truth-table evaluator for one structure.

    .. code-block:: py

        ev = Evaluator(s)
        names, arr = ev.table(f)   # arr[i, j] for names == ("x", "y")
    """

    def __init__(self, s: Structure):
        self.s = s
        self.n = s.universe_size
        self._cache: Dict[str, Table] = {}

    def _align(self, names, arr, target) -> np.ndarray:
        """
        Broadcast arr (axes = names) to the axes of target. Both sorted, and
        names a subset of target.
        """
        shape = [self.n if v in names else 1 for v in target]
        arr = arr.reshape(shape)
        return np.broadcast_to(arr, (self.n,) * len(target))

    def table(self, f: Formula) -> Table:
        key = f.text
        hit = self._cache.get(key)
        if hit is None:
            hit = self._compute(f)
            self._cache[key] = hit
        return hit

    def _compute(self, f: Formula) -> Table:
        n = self.n
        if isinstance(f, Eq):
            if f.left == f.right:
                return (f.left,), np.ones(n, dtype=bool)
            return tuple(sorted((f.left, f.right))), np.eye(n, dtype=bool)

        if isinstance(f, Atom):
            arr = _atom_table(self.s, f.rel, len(f.args))
            names = tuple(sorted(set(f.args)))
            grids = np.indices((n,) * len(names))
            idx = tuple(grids[names.index(a)] for a in f.args)
            return names, arr[idx]

        if isinstance(f, Not):
            names, arr = self.table(f.body)
            return names, ~arr

        if isinstance(f, (And, Or, Implies, Iff)):
            parts = f.items if isinstance(f, (And, Or)) else (f.left, f.right)
            tables = [self.table(g) for g in parts]
            names = tuple(sorted(set().union(*(t[0] for t in tables))))
            arrs = [self._align(t[0], t[1], names) for t in tables]
            if isinstance(f, And):
                out = np.logical_and.reduce(arrs)
            elif isinstance(f, Or):
                out = np.logical_or.reduce(arrs)
            elif isinstance(f, Implies):
                out = ~arrs[0] | arrs[1]
            else:
                out = arrs[0] == arrs[1]
            return names, np.asarray(out)

        if isinstance(f, Quantified):
            names, arr = self.table(f.body)
            full = tuple(sorted(set(names) | {f.var}))
            arr = self._align(names, arr, full)
            axis = full.index(f.var)
            if isinstance(f, Forall):
                out = arr.all(axis=axis)
            elif isinstance(f, Exists):
                out = arr.any(axis=axis)
            else:
                out = arr.sum(axis=axis) == 1
            return tuple(v for v in full if v != f.var), np.asarray(out)

        raise TypeError(f"Not a formula: {f!r}")

    def ordered(self, f: Formula, order: Sequence[str]) -> np.ndarray:
        """
        Truth array with axes in the given variable order. order must list
        exactly the free variables of f.
        """
        order = tuple(order)
        missing = f.free - set(order)
        if missing:
            raise UnboundVariable(f"No position for {', '.join(sorted(missing))}.")
        if len(set(order)) != len(order) or set(order) != f.free:
            raise ArityMismatch(f"Variables {order} do not match the free "
                f"variables {tuple(sorted(f.free))}.")
        names, arr = self.table(f)
        return arr.transpose([names.index(v) for v in order])


def truth_set(s: Structure, f: Formula,
        vars: Sequence[str]) -> FrozenSet[Tuple[int, ...]]:
    """
    ``{t | evaluate(s, f, vars -> t)}`` as a set of tuples.
    """
    arr = Evaluator(s).ordered(f, vars)
    if arr.ndim == 0:
        return frozenset({()}) if bool(arr) else frozenset()
    return frozenset(tuple(int(e) for e in t) for t in np.argwhere(arr))


def factorial_closure(f: Formula, vars: Sequence[str]) -> Formula:
    """
    Disjunction of f under every permutation of vars: some ordering of the
    arguments satisfies f.
    """
    vars = tuple(vars)
    if set(vars) != f.free or len(set(vars)) != len(vars):
        raise ArityMismatch(f"Variables {vars} do not match the free "
            f"variables {tuple(sorted(f.free))}.")
    items = []
    for perm in permutations(vars):
        g = substitute(f, dict(zip(vars, perm)))
        if g not in items:
            items.append(g)
    return items[0] if len(items) == 1 else Or(tuple(items))


def symmetrize(arr: np.ndarray) -> np.ndarray:
    """
    OR of arr over all permutations of its axes: the truth array of the
    factorial closure.
    """
    out = np.zeros_like(arr)
    for perm in permutations(range(arr.ndim)):
        out |= arr.transpose(perm)
    return out


def distinct_mask(n: int, k: int) -> np.ndarray:
    """
    Boolean array over ``range(n)**k``, true on tuples of distinct elements.
    """
    mask = np.ones((n,) * k, dtype=bool)
    grids = np.indices((n,) * k)
    for i in range(k):
        for j in range(i+1, k):
            mask &= grids[i] != grids[j]
    return mask
