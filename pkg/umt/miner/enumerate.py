"""
Exhaustive structure enumeration.

A structure over a fixed universe and signature is identified with its
code: bit i of relation r is set iff the i-th tuple (lexicographic order)
is in r, and relations follow the sorted signature, lowest bits first.
Labelled enumeration walks codes ``0 .. 2**bits - 1``; unlabelled
enumeration keeps the codes that are minimal among all relabellings.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .. import config
from ..errors import *
from ..formula.enumerate import normalize_signature
from ..structure import RelationTable, Structure

Signature = Tuple[Tuple[str, int], ...]


class EnumerationSpec:
    """
    What to enumerate.

    :param signature: ``{name: arity}`` or a sequence of pairs.
    :param labeled: False keeps one structure per isomorphism class.
    :param filter: Optional predicate; rejected structures are skipped.
    """
    universe_size: int
    signature: Signature
    labeled: bool
    filter: Optional[Callable[[Structure], bool]]

    def __init__(self, universe_size: int, signature=(("R", 2),),
            labeled: bool = True,
            filter: Optional[Callable[[Structure], bool]] = None) -> None:
        self.universe_size = universe_size
        self.signature = normalize_signature(signature)
        self.labeled = labeled
        self.filter = filter

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(self.universe_size ** k for _, k in self.signature)

    @property
    def bits(self) -> int:
        return sum(self.widths)

    @property
    def count(self) -> int:
        """
        Number of labelled structures.
        """
        return 1 << self.bits

    def check(self) -> None:
        limits = config.current().limits
        if self.universe_size > limits.miner_universe.value():
            raise SizeCapExceeded(f"Universe {self.universe_size} exceeds the "
                f"miner limit {limits.miner_universe.value()}.")
        if self.bits > limits.enum_bits.value():
            raise SizeCapExceeded(f"{self.bits} tuple bits exceed the "
                f"enumeration limit {limits.enum_bits.value()}.")

    def decode(self, code: int) -> Structure:
        n = self.universe_size
        tables = []
        shift = 0
        for (name, arity), width in zip(self.signature, self.widths):
            bits = (code >> shift) & ((1 << width) - 1)
            flat = (bits >> np.arange(width, dtype=np.int64)) & 1
            arr = flat.astype(bool).reshape((n,) * arity)
            tables.append(RelationTable.from_array(name, arr))
            shift += width
        return Structure(n, tables)

    def __repr__(self) -> str:
        sig = ", ".join(f"{k}/{a}" for k, a in self.signature)
        kind = "labeled" if self.labeled else "unlabeled"
        return f"EnumerationSpec({self.universe_size}, {{{sig}}}, {kind})"


def _sources(n: int, arity: int, perm: Sequence[int]) -> np.ndarray:
    """
    ``src[m]``: index of the tuple ``perm(t_m)``, t_m the m-th tuple.
    """
    weights = [n ** (arity-1-i) for i in range(arity)]
    return np.array([sum(perm[e] * w for e, w in zip(t, weights))
        for t in product(range(n), repeat=arity)], dtype=np.int64)


def relabel_maps(spec: EnumerationSpec) -> List[np.ndarray]:
    """
    For every permutation of the universe, the bit source of each code bit.
    """
    n = spec.universe_size
    maps = []
    for perm in permutations(range(n)):
        parts = []
        offset = 0
        for (_, arity), width in zip(spec.signature, spec.widths):
            parts.append(_sources(n, arity, perm) + offset)
            offset += width
        maps.append(np.concatenate(parts) if parts
            else np.zeros(0, dtype=np.int64))
    return maps


def canonical_codes(spec: EnumerationSpec, codes: np.ndarray,
        maps: Optional[List[np.ndarray]] = None) -> np.ndarray:
    """
    Minimum code over all relabellings, for a batch of codes.
    """
    if maps is None:
        maps = relabel_maps(spec)
    codes = np.asarray(codes, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(spec.bits, dtype=np.int64)) & 1
    weights = np.left_shift(np.int64(1), np.arange(spec.bits, dtype=np.int64))
    best = codes.copy()
    for src in maps:
        best = np.minimum(best, bits[:, src] @ weights)
    return best


def chunks(spec: EnumerationSpec,
        chunk_bits: Optional[int] = None) -> List[Tuple[int, int]]:
    """
    Code ranges ``[start, stop)`` of ``2**chunk_bits`` codes each.
    """
    if chunk_bits is None:
        chunk_bits = config.current().miner.chunk_bits.value()
    size = 1 << min(chunk_bits, spec.bits)
    return [(start, min(start + size, spec.count))
        for start in range(0, spec.count, size)]


def chunk_codes(spec: EnumerationSpec, start: int, stop: int,
        maps: Optional[List[np.ndarray]] = None) -> np.ndarray:
    """
    Codes of one chunk that ``spec`` enumerates, before the filter.
    """
    codes = np.arange(start, stop, dtype=np.int64)
    if spec.labeled:
        return codes
    return codes[canonical_codes(spec, codes, maps) == codes]


def enumerate_structures(spec: EnumerationSpec) -> Iterator[Structure]:
    """
    Every structure ``spec`` describes, in increasing code order.
    """
    spec.check()
    maps = None if spec.labeled else relabel_maps(spec)
    for start, stop in chunks(spec):
        for code in chunk_codes(spec, start, stop, maps):
            s = spec.decode(int(code))
            if spec.filter is None or spec.filter(s):
                yield s


def _cycles(src: np.ndarray) -> int:
    seen = np.zeros(len(src), dtype=bool)
    count = 0
    for i in range(len(src)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = src[j]
    return count


def count_unlabeled(n: int, signature=(("R", 2),)) -> int:
    """
    Number of isomorphism classes by Burnside's lemma: the average over all
    permutations of the number of codes they fix.
    """
    sig = normalize_signature(signature)
    total = 0
    for perm in permutations(range(n)):
        fixed = 1
        for _, arity in sig:
            fixed *= 2 ** _cycles(_sources(n, arity, perm))
        total += fixed
    count = Fraction(total, factorial(n))
    assert count.denominator == 1
    return int(count)
