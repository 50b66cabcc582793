"""
Standard structure families used by tests, campaigns and the samples.
"""

from itertools import permutations
from typing import Iterable, Sequence

from .structure import RelationTable, Structure


def single_relation(n: int, name: str, tuples: Iterable[Sequence[int]],
        arity: int = 2) -> Structure:
    return Structure(n, [RelationTable(name, arity, tuples)])


def empty_structure(n: int) -> Structure:
    """
    Universe with no relations at all.
    """
    return Structure(n)


def linear_chain(n: int, strict: bool = True, name: str = "R") -> Structure:
    """
    ``0 < 1 < ... < n-1``; reflexive (``<=``) when not strict.
    """
    if strict:
        rows = [(x, y) for x in range(n) for y in range(n) if x < y]
    else:
        rows = [(x, y) for x in range(n) for y in range(n) if x <= y]
    return single_relation(n, name, rows)


def cyclic_order(n: int, name: str = "C") -> Structure:
    """
    Standard cyclic order on Z_n: ``[a,b,c]`` iff
    ``0 < (b-a) mod n < (c-a) mod n``.
    """
    rows = [(a, b, c) for a, b, c in permutations(range(n), 3)
        if 0 < (b-a) % n < (c-a) % n]
    return single_relation(n, name, rows, arity=3)


def circulant_tournament(n: int, connection: Iterable[int],
        name: str = "R") -> Structure:
    """
    Arcs ``x -> x+d`` for every d in the connection set.
    The set must contain exactly one of ``d, n-d`` for every ``d != 0``.
    """
    conn = {d % n for d in connection}
    assert 0 not in conn
    assert all((n-d) % n not in conn for d in conn), "not a tournament"
    assert len(conn) * 2 == n - 1, "not a tournament"
    rows = [(x, (x+d) % n) for x in range(n) for d in sorted(conn)]
    return single_relation(n, name, rows)


def quadratic_residues(p: int) -> Sequence[int]:
    """
    Nonzero squares mod p, the connection set of the Paley tournament
    (p = 3 mod 4).
    """
    return sorted({(x*x) % p for x in range(1, p)})


def total_preorder(classes: Sequence[Sequence[int]],
        name: str = "D") -> Structure:
    """
    Total preorder whose classes are listed lowest first: ``D(x,y)`` iff the
    class of x is not above the class of y.
    """
    rank = {}
    for i, cls in enumerate(classes):
        for e in cls:
            rank[e] = i
    n = len(rank)
    assert sorted(rank) == list(range(n))
    rows = [(x, y) for x in range(n) for y in range(n) if rank[x] <= rank[y]]
    return single_relation(n, name, rows)
