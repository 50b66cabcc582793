"""
Global utilities.
"""

from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterator, Sequence, Tuple

VERSION = "0.3.0"

ROOT = Path(__file__).absolute().parent


def mask_of(elements) -> int:
    """
    Bitmask with bit ``i`` set for every ``i`` in elements.
    """
    mask = 0
    for e in elements:
        mask |= 1 << int(e)
    return mask


def members(mask: int) -> Tuple[int, ...]:
    """
    Sorted element indices of a bitmask.
    """
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def lex_subsets(n: int) -> Iterator[Tuple[int, ...]]:
    """
    All nonempty subsets of ``range(n)`` as sorted tuples, in lexicographic
    order: (0,), (0, 1), (0, 1, 2), (0, 2), (1,), ...
    """
    def rec(prefix, start):
        for i in range(start, n):
            cur = prefix + (i,)
            yield cur
            yield from rec(cur, i+1)

    yield from rec((), 0)


def subsets_by_size(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Nonempty subsets of ``range(n)``, smallest first, lexicographic within
    each size.
    """
    for k in range(1, n+1):
        yield from combinations(range(n), k)


def frozen(groups: Sequence[Sequence[int]]) -> Tuple[FrozenSet[int], ...]:
    return tuple(frozenset(g) for g in groups)


def tick(flag: bool) -> str:
    """
    Check mark or cross for report tables.
    """
    return "✓" if flag else "✗"
