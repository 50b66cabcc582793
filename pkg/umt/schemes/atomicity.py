"""
Atomicity schemes Q, F and Q1 over one binary relation.

Sets are bitmasks over the universe. The admissible sets depend on the
mode: every nonempty subset (``subsets``), every nonempty union of point
orbits (``orbits``), or the nonempty truth sets of enumerated unary formulas
(``formulas:D``). Sets are visited in lexicographic order of their members,
formulas in enumeration order, and the first violation is reported.
"""

from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .. import config, logger
from ..aut import point_orbits
from ..errors import *
from ..formula import Evaluator, Formula, distinct_formulas, free_names
from ..structure import Structure
from ..utils import lex_subsets, mask_of, members, subsets_by_size
from .mode import Mode
from .verdict import SchemeVerdict

NO_MINIMIZER = "no-minimizer"
MULTIPLE_MINIMIZERS = "multiple-minimizers"
EMPTY_Z = "empty-z"
SPLIT_Z = "split-z"

Admissible = Tuple[int, Optional[Formula]]


def _resolve_mode(mode) -> Mode:
    if mode is None:
        mode = config.current().schemes.atomicity_mode.value()
    return Mode.parse(mode)


def _down_masks(s: Structure, rel: str) -> List[int]:
    """
    ``down[x]`` has bit y set iff ``rel(x, y)``.
    """
    a = s.binary(rel)
    return [mask_of(np.flatnonzero(a[x])) for x in s.elements]


def admissible_sets(s: Structure, mode: Mode) -> Iterator[Admissible]:
    """
    Nonempty admissible sets as ``(mask, formula or None)``.
    """
    n = s.universe_size
    if mode.subsets:
        for sub in lex_subsets(n):
            yield mask_of(sub), None
    elif mode.orbits:
        orbit_masks = [mask_of(o) for o in point_orbits(s)]
        unions = set()
        for k in range(1, len(orbit_masks)+1):
            for combo in combinations(orbit_masks, k):
                unions.add(sum(combo))
        for mask in sorted(unions, key=members):
            yield mask, None
    else:
        ev = Evaluator(s)
        names = free_names(1)
        for f in distinct_formulas(s, mode.depth, 1):
            mask = mask_of(np.flatnonzero(ev.ordered(f, names)))
            if mask:
                yield mask, f


def _minimizers(down: List[int], mask: int) -> int:
    out = 0
    for x in members(mask):
        if mask & ~down[x] == 0:
            out |= 1 << x
    return out


def _empty_universe(scheme, mode, rel) -> SchemeVerdict:
    msg = "Empty universe: every scheme holds vacuously."
    logger.warn(msg)
    return SchemeVerdict(scheme, True, mode, relation=rel, vacuous=True,
        warnings=[msg])


def check_Q(s: Structure, rho: str, mode=None) -> SchemeVerdict:
    """
    Every admissible nonempty A has exactly one x in A with ``rho(x, y)``
    for all y in A.
    """
    down = _down_masks(s, rho)
    mode = _resolve_mode(mode)
    if s.universe_size == 0:
        return _empty_universe("q", mode, rho)

    for mask, f in admissible_sets(s, mode):
        mins = _minimizers(down, mask)
        if mins == 0 or mins & (mins - 1):
            kind = NO_MINIMIZER if mins == 0 else MULTIPLE_MINIMIZERS
            return SchemeVerdict("q", False, mode, relation=rho,
                witness_formula=f, witness_subset=members(mask),
                minimizers=members(mins), violation=kind)
    return SchemeVerdict("q", True, mode, relation=rho)


def check_F(s: Structure, rho: str) -> SchemeVerdict:
    """
    Every finite, that is every nonempty, subset has a unique rho-least
    member. Computed independently of ``check_Q``: subsets by size, least
    members from the induced block of the relation.
    """
    a = s.binary(rho)
    mode = Mode(Mode.SUBSETS)
    if s.universe_size == 0:
        return _empty_universe("f", mode, rho)

    failures = []
    for sub in subsets_by_size(s.universe_size):
        block = a[np.ix_(sub, sub)]
        least = [sub[i] for i in np.flatnonzero(block.all(axis=1))]
        if len(least) != 1:
            failures.append((sub, tuple(least)))
    if not failures:
        return SchemeVerdict("f", True, mode, relation=rho)

    sub, least = min(failures)
    kind = NO_MINIMIZER if not least else MULTIPLE_MINIMIZERS
    return SchemeVerdict("f", False, mode, relation=rho, witness_subset=sub,
        minimizers=least, violation=kind)


def check_Q1(s: Structure, delta: str, mode=None) -> SchemeVerdict:
    """
    For every admissible nonempty A, ``z_A = {x in A | delta(x, y) for all
    y in A}`` is nonempty and no admissible B splits it (has members both
    inside and outside z_A).
    """
    down = _down_masks(s, delta)
    mode = _resolve_mode(mode)
    n = s.universe_size
    if n == 0:
        return _empty_universe("q1", mode, delta)

    full = (1 << n) - 1
    sets = list(admissible_sets(s, mode))
    z_sets: Dict[str, Tuple[int, ...]] = {
        "M": members(_minimizers(down, full)),
    }

    for mask, f in sets:
        z = _minimizers(down, mask)
        label = ",".join(map(str, members(mask)))
        if z == 0:
            z_sets[label] = ()
            return SchemeVerdict("q1", False, mode, relation=delta,
                witness_formula=f, witness_subset=members(mask),
                violation=EMPTY_Z, z_sets=z_sets)
        for b, _ in sets:
            if z & b and z & ~b:
                z_sets[label] = members(z)
                return SchemeVerdict("q1", False, mode, relation=delta,
                    witness_formula=f, witness_subset=members(mask),
                    violation=SPLIT_Z, splitter=members(b), z_sets=z_sets)
    return SchemeVerdict("q1", True, mode, relation=delta, z_sets=z_sets)
