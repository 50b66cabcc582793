"""
Independent re-checking of violation witnesses.
"""

from ..aut import automorphism_group
from ..errors import *
from ..formula import evaluate, factorial_closure, truth_set
from ..structure import Structure
from ..utils import mask_of
from .atomicity import admissible_sets
from .mode import Mode
from .verdict import SchemeVerdict


def _distinct(s: Structure, t) -> bool:
    return t is not None and len(set(t)) == len(t) \
        and all(0 <= e < s.universe_size for e in t)


def _least(s: Structure, rel: str, subset):
    a = s.binary(rel)
    return tuple(x for x in subset if all(a[x, y] for y in subset))


def _admissible(s: Structure, mode: str, *subsets) -> bool:
    """
    Every subset is nonempty, inside the universe and admissible under mode.
    """
    wanted = {mask_of(sub) for sub in subsets}
    if 0 in wanted or max(wanted) >> s.universe_size:
        return False
    mode = Mode.parse(mode)
    if mode.subsets:
        return True
    for mask, _ in admissible_sets(s, mode):
        wanted.discard(mask)
        if not wanted:
            return True
    return False


def recheck(s: Structure, v: SchemeVerdict) -> bool:
    """
    True iff the witnesses of a violated verdict show the violation on s
    directly. Verdicts that hold carry nothing to check and pass.
    """
    if v.holds:
        return True

    if v.scheme == "uniform":
        t, u = v.witness_tuple, v.falsifying_tuple
        if not (_distinct(s, t) and _distinct(s, u)):
            return False
        if v.witness_formula is not None:
            f = v.witness_formula
            names = sorted(f.free)
            closure = factorial_closure(f, names)
            return evaluate(s, f, dict(zip(names, t))) \
                and not evaluate(s, closure, dict(zip(names, u)))
        # orbit witness: no automorphism moves the set of t onto that of u
        target = sorted(u)
        return all(sorted(g[e] for e in t) != target
            for g in automorphism_group(s))

    if v.witness_subset is None:
        raise BadWitness("Violated verdict without a witness subset.")
    subset = tuple(v.witness_subset)
    sets = [subset] if v.splitter is None else [subset, tuple(v.splitter)]
    if not _admissible(s, v.mode, *sets):
        return False
    if v.witness_formula is not None:
        found = truth_set(s, v.witness_formula, sorted(v.witness_formula.free))
        if tuple(sorted(e for (e,) in found)) != subset:
            return False

    least = _least(s, v.relation, subset)
    if v.scheme in ("q", "f"):
        return len(least) != 1 and least == tuple(v.minimizers or ())

    if v.scheme == "q1":
        if v.violation == "empty-z":
            return least == ()
        if v.splitter is None:
            return False
        inside = set(least) & set(v.splitter)
        return bool(inside) and bool(set(least) - inside)

    raise BadWitness(f"Unknown scheme {v.scheme!r}.")
