"""
Relation taxonomy: binary relation properties, cyclic order axioms,
linearization of distinguishabilities and right segments of orders.

Every flag is an exhaustive check over the universe. Failing flags record
their lexicographically first counterexample in ``witnesses``.
"""

from itertools import permutations
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import *
from .structure import RelationTable, Structure
from .utils import members


class Tri:
    """
    Three valued flag: the property holds everywhere, its anti form holds
    everywhere, or neither. HOLDS wins when both hold (empty cases).
    """
    HOLDS = "holds"
    ANTI = "anti"
    NEITHER = "neither"

    @staticmethod
    def of(holds: bool, anti: bool) -> str:
        if holds:
            return Tri.HOLDS
        return Tri.ANTI if anti else Tri.NEITHER


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None
    return tuple(int(e) for e in idx[0])


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


class BinaryReport:
    """
    Classification of one binary relation.
    """
    FLAGS = ("irreflexive", "antisymmetric", "antitransitive", "linear",
        "dense", "discrete", "has_least", "has_greatest")
    LABELS = ("equivalence", "distinguishability", "order", "strict_order",
        "preorder", "total_preorder", "well_order")

    rel: str
    reflexive: str
    symmetric: str
    transitive: str
    witnesses: Dict[str, Tuple[int, ...]]

    def __init__(self, rel: str) -> None:
        self.rel = rel
        self.witnesses = {}

    @property
    def equivalence(self) -> bool:
        return self.reflexive == Tri.HOLDS and self.symmetric == Tri.HOLDS \
            and self.transitive == Tri.HOLDS

    @property
    def distinguishability(self) -> bool:
        return self.irreflexive and self.symmetric == Tri.HOLDS \
            and self.antitransitive

    @property
    def order(self) -> bool:
        return self.reflexive == Tri.HOLDS and self.antisymmetric \
            and self.transitive == Tri.HOLDS

    @property
    def strict_order(self) -> bool:
        return self.irreflexive and self.antisymmetric \
            and self.transitive == Tri.HOLDS

    @property
    def preorder(self) -> bool:
        return self.reflexive == Tri.HOLDS and self.transitive == Tri.HOLDS

    @property
    def total_preorder(self) -> bool:
        return self.preorder and self.linear

    @property
    def linear_order(self) -> bool:
        """
        Reflexive or strict, in either case linear.
        """
        return (self.order or self.strict_order) and self.linear

    def to_dict(self) -> dict:
        out = {
            "relation": self.rel,
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
        }
        for key in self.FLAGS + self.LABELS:
            out[key] = bool(getattr(self, key))
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def classify_binary(s: Structure, rel: str) -> BinaryReport:
    a = s.binary(rel)
    n = s.universe_size
    eye = np.eye(n, dtype=bool)
    off = a & ~eye
    report = BinaryReport(rel)
    wit = report.witnesses

    diag = np.diagonal(a)
    refl = bool(diag.all())
    irrefl = not diag.any()
    if not refl:
        wit["reflexive"] = _first(~diag)
    if not irrefl:
        wit["irreflexive"] = _first(diag)

    asym_part = a & ~a.T
    sym = not asym_part.any()
    antisym = not (off & a.T).any()
    if not sym:
        wit["symmetric"] = _first(asym_part)
    if not antisym:
        wit["antisymmetric"] = _first(off & a.T)

    # x R y, y R z, not x R z
    trans_viol = a[:, :, None] & a[None, :, :] & ~a[:, None, :]
    # x R z, not y R x, not y R z, indexed (x, y, z)
    anti_viol = a[:, None, :] & ~a.T[:, :, None] & ~a[None, :, :]
    trans = not trans_viol.any()
    antitrans = not anti_viol.any()
    if not trans:
        wit["transitive"] = _first(trans_viol)
    if not antitrans:
        wit["antitransitive"] = _first(anti_viol)

    report.reflexive = Tri.of(refl, irrefl)
    report.symmetric = Tri.of(sym, antisym)
    report.transitive = Tri.of(trans, antitrans)
    report.irreflexive = irrefl
    report.antisymmetric = antisym
    report.antitransitive = antitrans

    gap = ~(a | a.T) & ~eye
    report.linear = not gap.any()
    if not report.linear:
        wit["linear"] = _first(gap)

    sparse = off & ~_compose(off, off)
    report.dense = not sparse.any()
    if not report.dense:
        wit["dense"] = _first(sparse)

    # strict successors with nothing strictly between
    covers = off & ~_compose(off, off)
    jumps = off.any(axis=1) & ~covers.any(axis=1)
    report.discrete = not jumps.any()
    if not report.discrete:
        wit["discrete"] = _first(jumps)

    report.has_least = bool((off | eye).all(axis=1).any()) if n else False
    report.has_greatest = bool((off | eye).all(axis=0).any()) if n else False

    least = _no_unique_least(a)
    report.well_order = least is None
    if least is not None:
        wit["well_order"] = least
    return report


def _no_unique_least(a: np.ndarray) -> Optional[Tuple[int, ...]]:
    """
    First nonempty subset (by bitmask) without exactly one least element,
    or None.
    """
    n = a.shape[0]
    if n == 0:
        return None
    masks = np.arange(1, 1 << n, dtype=np.int64)
    count = np.zeros(len(masks), dtype=np.int64)
    for x in range(n):
        up = int(sum(1 << y for y in range(n) if a[x, y] or y == x))
        inside = (masks >> x) & 1
        count += inside * ((masks & ~up) == 0)
    bad = np.flatnonzero(count != 1)
    if len(bad) == 0:
        return None
    return members(int(masks[bad[0]]))


class CyclicReport:
    """
    Cyclic order axioms of one ternary relation, over distinct elements.
    """
    FLAGS = ("asymmetry3", "transitivity3", "cyclicity", "completeness3",
        "dense3")

    rel: str
    witnesses: Dict[str, Tuple[int, ...]]

    def __init__(self, rel: str) -> None:
        self.rel = rel
        self.witnesses = {}

    @property
    def cyclic_order(self) -> bool:
        return self.asymmetry3 and self.transitivity3 and self.cyclicity

    def to_dict(self) -> dict:
        out = {"relation": self.rel}
        for key in self.FLAGS:
            out[key] = bool(getattr(self, key))
        out["cyclic_order"] = self.cyclic_order
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def classify_cyclic(s: Structure, rel: str) -> CyclicReport:
    table = s.table(rel)
    if table.arity != 3:
        raise ArityMismatch(f"Relation {rel} has arity {table.arity}, "
            "cyclic orders are ternary.")
    c = s.array(rel)
    n = s.universe_size
    report = CyclicReport(rel)
    wit = report.witnesses

    def fail(flag, t):
        if flag not in wit:
            wit[flag] = t

    for a, b, x in permutations(range(n), 3):
        t = (a, b, x)
        if c[t]:
            if c[x, b, a]:
                fail("asymmetry3", t)
            if not c[b, x, a]:
                fail("cyclicity", t)
            if not any(c[a, b, m] and c[a, m, x] for m in range(n)
                    if m not in t):
                fail("dense3", t)
        elif not c[x, b, a]:
            fail("completeness3", t)

    for a, b, x, d in permutations(range(n), 4):
        if c[a, b, x] and c[a, x, d] and not c[a, b, d]:
            fail("transitivity3", (a, b, x, d))

    for flag in CyclicReport.FLAGS:
        setattr(report, flag, flag not in wit)
    return report


def linearize(s: Structure, rel: str) -> RelationTable:
    """
    Strict linear order extending a distinguishability: related pairs are
    oriented from the lower to the higher index, closed transitively, and
    unrelated pairs are ordered by index.
    """
    if not classify_binary(s, rel).distinguishability:
        raise NotDistinguishability(f"Relation {rel} is not irreflexive, "
            "symmetric and antitransitive.")
    n = s.universe_size
    m = np.triu(s.binary(rel), 1)
    for k in range(n):
        m |= np.outer(m[:, k], m[k, :])

    for x in range(n):
        for y in range(x+1, n):
            if not (m[x, y] or m[y, x]):
                m[x, y] = True
                for k in range(n):
                    m |= np.outer(m[:, k], m[k, :])

    out = RelationTable.from_array(rel + "_lin", m)
    check = classify_binary(s.with_relation(out), out.name)
    assert check.strict_order and check.linear
    return out


class RightSegmentReport:
    """
    Right segments of a linear order.

    ``proper_segments`` are the upward closed sets with an element outside
    below an element inside, sorted by size then members.
    ``principal_upsets[x]`` is ``{t | rho(x, t)} | {x}``.
    """
    rel: str
    proper_segments: List[Tuple[int, ...]]
    principal_upsets: List[Tuple[int, ...]]
    injective: bool
    order_reversing: bool

    def __init__(self, rel: str) -> None:
        self.rel = rel
        self.proper_segments = []
        self.principal_upsets = []

    def to_dict(self) -> dict:
        return {
            "relation": self.rel,
            "proper_segments": [list(q) for q in self.proper_segments],
            "principal_upsets": [list(q) for q in self.principal_upsets],
            "injective": self.injective,
            "order_reversing": self.order_reversing,
        }


def right_segments(s: Structure, rel: str) -> RightSegmentReport:
    info = classify_binary(s, rel)
    if not info.linear_order:
        raise NotAnOrder(f"Relation {rel} is not a linear order.")
    a = s.binary(rel)
    n = s.universe_size
    report = RightSegmentReport(rel)

    for mask in range(1, 1 << n):
        q = np.array([(mask >> i) & 1 for i in range(n)], dtype=bool)
        # up-closed: no x in Q with rho(x, y), y outside
        if (a[q][:, ~q]).any():
            continue
        if (a[~q][:, q]).any():
            report.proper_segments.append(members(mask))
    report.proper_segments.sort(key=lambda q: (len(q), q))

    ups = [tuple(t for t in range(n) if a[x, t] or t == x) for x in range(n)]
    report.principal_upsets = ups
    report.injective = len(set(ups)) == n
    report.order_reversing = all(
        bool(a[x, y]) == set(ups[y]).issubset(ups[x])
        for x in range(n) for y in range(n) if x != y)
    return report


def square_inclusion(s: Structure, rel: str) -> str:
    """
    Compare R∘R with R: ``equal``, ``strict`` (R∘R a proper subset),
    ``superset`` or ``incomparable``.
    """
    a = s.binary(rel)
    sq = _compose(a, a)
    if (sq == a).all():
        return "equal"
    if not (sq & ~a).any():
        return "strict"
    if not (a & ~sq).any():
        return "superset"
    return "incomparable"


def is_trivial(s: Structure, rel: str) -> bool:
    """
    Empty, diagonal, co-diagonal or full.
    """
    a = s.binary(rel)
    eye = np.eye(s.universe_size, dtype=bool)
    return bool((~a).all() or (a == eye).all() or (a == ~eye).all()
        or a.all())


def is_very_simple(s: Structure, rel: str) -> bool:
    """
    Some element is related to every other one, or every other one is
    related to it.
    """
    info = classify_binary(s, rel)
    return info.has_least or info.has_greatest
