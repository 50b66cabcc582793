"""
Uniformity schemes and indicators.

A single n-level instance for a formula f with n free variables reads:
if some tuple of n distinct elements satisfies f, then every such tuple
satisfies f under some permutation of its entries. Over all definable f
this is the same as the automorphism group acting transitively on the
n-element subsets, which is what ``orbits`` mode checks.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .. import config, logger
from ..aut import SUBSETS, automorphism_group, orbits, point_orbits
from ..errors import *
from ..formula import (Evaluator, Formula, distinct_formulas, distinct_mask,
    free_names, symmetrize)
from ..structure import Structure
from .mode import Mode
from .verdict import SchemeVerdict

SCHEME = "uniform"


def _first(mask: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(e) for e in np.argwhere(mask)[0])


def instance_violation(ev: Evaluator, f: Formula, names: Sequence[str],
        distinct: np.ndarray):
    """
    None if the instance of f holds, else ``(witness, falsifier)``.
    """
    arr = ev.ordered(f, names)
    sat = arr & distinct
    if not sat.any():
        return None
    uncovered = distinct & ~symmetrize(arr)
    if not uncovered.any():
        return None
    return _first(sat), _first(uncovered)


def _resolve_mode(mode) -> Mode:
    if mode is None:
        mode = config.current().schemes.uniformity_mode.value()
    mode = Mode.parse(mode)
    if mode.subsets:
        raise BadMode("Uniformity over arbitrary subsets is refuted by any "
            "singleton; use orbits or formulas.")
    return mode


def check_uniformity(s: Structure, n: int, mode=None,
        f: Optional[Formula] = None, group=None) -> SchemeVerdict:
    """
    Check the n-uniformity scheme on s.

    :param mode: ``Mode`` or its text; defaults to
        ``schemes.uniformity_mode``.
    :param f: Check just this instance. Its free variables, sorted by name,
        fill the n positions.
    :param group: Automorphism group of s, if already known.
    """
    if n < 1:
        raise BadLevel(f"Uniformity level {n} must be at least 1.")
    size = s.universe_size

    if f is not None:
        names = tuple(sorted(f.free))
        if len(names) != n:
            raise ArityMismatch(f"Formula has {len(names)} free variables, "
                f"level is {n}.")
        ev = Evaluator(s)
        found = instance_violation(ev, f, names, distinct_mask(size, n))
        if found is None:
            return SchemeVerdict(SCHEME, True, "formula", n=n,
                vacuous=n > size)
        return SchemeVerdict(SCHEME, False, "formula", n=n, witness_formula=f,
            witness_tuple=found[0], falsifying_tuple=found[1])

    mode = _resolve_mode(mode)
    warnings = []
    if size == 0:
        msg = "Empty universe: every scheme holds vacuously."
        logger.warn(msg)
        warnings.append(msg)
    if n >= size:
        # at most one n-subset, every instance holds
        return SchemeVerdict(SCHEME, True, mode, n=n, vacuous=n > size,
            warnings=warnings)

    if mode.orbits:
        part = orbits(s, n, SUBSETS, group)
        if len(part) == 1:
            return SchemeVerdict(SCHEME, True, mode, n=n)
        return SchemeVerdict(SCHEME, False, mode, n=n,
            orbit_classes=part.classes, witness_tuple=part.classes[0][0],
            falsifying_tuple=part.classes[1][0])

    names = free_names(n)
    ev = Evaluator(s)
    distinct = distinct_mask(size, n)
    for g in distinct_formulas(s, mode.depth, n):
        found = instance_violation(ev, g, names, distinct)
        if found is not None:
            return SchemeVerdict(SCHEME, False, mode, n=n, witness_formula=g,
                witness_tuple=found[0], falsifying_tuple=found[1])
    return SchemeVerdict(SCHEME, True, mode, n=n)


def uniformity_degrees(s: Structure, max_n: int) -> List[int]:
    """
    Levels ``1..max_n`` at which s is uniform (orbit mode). Levels above the
    universe size are included.
    """
    size = s.universe_size
    group = automorphism_group(s) if 1 < size else None
    out = []
    for n in range(1, max_n+1):
        if check_uniformity(s, n, Mode(Mode.ORBITS), group=group).holds:
            out.append(n)
    return out


def find_indicators(s: Structure,
        depth: int) -> List[Tuple[Formula, Tuple[int, ...]]]:
    """
    One enumerated unary formula per truth set that is neither empty nor
    the whole universe, with that truth set.
    """
    ev = Evaluator(s)
    names = free_names(1)
    out = []
    for f in distinct_formulas(s, depth, 1):
        arr = ev.ordered(f, names)
        if arr.any() and not arr.all():
            out.append((f, tuple(int(e) for e in np.flatnonzero(arr))))
    return out


def indicator_partition(s: Structure, depth: int) -> List[Tuple[int, ...]]:
    """
    Elements grouped by membership in every enumerated unary formula. Never
    finer than the point orbits.
    """
    size = s.universe_size
    if size == 0:
        return []
    ev = Evaluator(s)
    names = free_names(1)
    rows = [ev.ordered(f, names) for f in distinct_formulas(s, depth, 1)]
    table = np.array(rows, dtype=bool).reshape(len(rows), size)
    groups = {}
    for e in range(size):
        groups.setdefault(table[:, e].tobytes(), []).append(e)
    return sorted(tuple(g) for g in groups.values())


def indiscernibility_partition(s: Structure) -> List[Tuple[int, ...]]:
    """
    Elements no definable unary set separates: the automorphism point
    orbits.
    """
    return point_orbits(s)
