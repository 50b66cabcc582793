"""
Exhaustive formula enumeration.

Free variables are ``x1..xn``; the variable bound at nesting level k is
``yk``, so alpha-variants are generated once. Layers by depth:

- depth 0: relation atoms over the variables in scope, ``u=v`` for distinct
  scope variables, ``x=x`` for the free ones.
- depth d: ``!phi`` (phi not itself a negation), ``phi & psi`` and
  ``phi | psi`` for every unordered pair of distinct formulas of depth below
  d with at least one of depth d-1 (operands sorted by text), and
  ``exists y. phi`` / ``forall y. phi`` with y free in phi of depth d-1.

Each formula is produced once, in the layer of its nesting depth. Only
formulas whose free variables are exactly ``x1..xn`` are emitted.

``distinct_formulas`` walks the same grammar over one structure and skips
every formula whose free variables and truth array repeat an earlier one.
Connectives and quantifiers only look at the truth arrays of their parts,
so it still reaches every truth set the full stream reaches.
"""

from functools import lru_cache
from itertools import chain, combinations, product
from typing import (Dict, Iterator, List, Mapping, Sequence, Set, Tuple,
    Union)

import numpy as np

from .. import config
from ..errors import *
from ..structure import Structure
from .ast import *
from .semantics import Evaluator

Signature = Tuple[Tuple[str, int], ...]
Layers = Tuple[Tuple[Formula, ...], ...]
Entry = Tuple[Formula, np.ndarray]


def free_names(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n+1))


def bound_name(level: int) -> str:
    return f"y{level}"


def normalize_signature(
        signature: Union[Mapping[str, int], Signature]) -> Signature:
    return tuple(sorted(dict(signature).items()))


def _scope(n: int, k: int) -> Tuple[str, ...]:
    return free_names(n) + tuple(bound_name(i) for i in range(1, k+1))


def _atoms(sig: Signature, n: int, k: int) -> List[Formula]:
    scope = _scope(n, k)
    out = []
    for rel, arity in sig:
        for args in product(scope, repeat=arity):
            out.append(Atom(rel, args))
    for u, v in combinations(scope, 2):
        out.append(Eq(u, v))
    for v in free_names(n):
        out.append(Eq(v, v))
    return list(dict.fromkeys(out))


def _pair(phi: Formula, psi: Formula) -> Tuple[Formula, Formula]:
    return (phi, psi) if phi.text <= psi.text else (psi, phi)


def _grow(prev: Layers, inner: Sequence[Formula], y: str) -> Iterator[Formula]:
    """
    The layer after prev. inner is the last layer one scope deeper, where y
    is the newest bound variable.
    """
    last = prev[-1]
    for phi in last:
        if not isinstance(phi, Not):
            yield Not(phi)
    lower = tuple(chain.from_iterable(prev[:-1]))
    for j, phi in enumerate(last):
        for psi in chain(lower, last[:j]):
            pair = _pair(phi, psi)
            yield And(pair)
            yield Or(pair)
    for phi in inner:
        if y in phi.free:
            yield Exists(y, phi)
            yield Forall(y, phi)


@lru_cache(maxsize=None)
def _layers(sig: Signature, n: int, k: int, depth: int) -> Layers:
    """
    Formulas over the scope ``x1..xn, y1..yk`` (not all of it need occur),
    grouped by depth.
    """
    if depth == 0:
        return (tuple(_atoms(sig, n, k)),)
    prev = _layers(sig, n, k, depth-1)
    inner = _layers(sig, n, k+1, depth-1)[-1]
    return prev + (tuple(_grow(prev, inner, bound_name(k+1))),)


def _validate(depth: int, free_count: int) -> None:
    limit = config.current().limits.formula_depth.value()
    if not 0 <= depth <= limit:
        raise DepthLimit(f"Depth {depth} is outside [0, {limit}].")
    if free_count < 0:
        raise BadLevel("Number of free variables must be non-negative.")


def _stream(sig: Signature, depth: int, n: int) -> Iterator[Formula]:
    # the deepest layer is only streamed, never cached
    if depth == 0:
        formulas = _layers(sig, n, 0, 0)[0]
    else:
        prev = _layers(sig, n, 0, depth-1)
        inner = _layers(sig, n, 1, depth-1)[-1]
        formulas = chain(chain.from_iterable(prev),
            _grow(prev, inner, bound_name(1)))
    want = frozenset(free_names(n))
    return (f for f in formulas if f.free == want)


def enumerate_formulas(signature, depth: int,
        free_count: int) -> Iterator[Formula]:
    """
    Every formula up to ``depth`` with free variables exactly
    ``x1..x{free_count}``, shallowest first. Deterministic and finite.

    :param signature: ``{name: arity}`` or ``Structure.signature``.
    """
    _validate(depth, free_count)
    return _stream(normalize_signature(signature), depth, free_count)


def count_formulas(signature, depth: int, free_count: int) -> int:
    return sum(1 for _ in enumerate_formulas(signature, depth, free_count))


class _TableSearch:
    """
    The layers of ``_layers`` over one structure, one formula per distinct
    ``(free variables, truth array)``. Arrays have one axis per scope
    variable, in scope order.
    """

    def __init__(self, s: Structure, sig: Signature, n: int):
        self.ev = Evaluator(s)
        self.size = s.universe_size
        self.sig = sig
        self.n = n
        self._done: Dict[int, List[List[Entry]]] = {}
        self._seen: Dict[int, Set] = {}

    def layers(self, k: int, depth: int) -> List[List[Entry]]:
        done = self._done.setdefault(k, [])
        while len(done) <= depth:
            done.append(list(self.grow(k, done)))
        return done[:depth+1]

    def _fresh(self, k: int, free, arr: np.ndarray) -> bool:
        seen = self._seen.setdefault(k, set())
        key = (free, arr.tobytes())
        if key in seen:
            return False
        seen.add(key)
        return True

    def _spread(self, f: Formula, scope: Tuple[str, ...]) -> np.ndarray:
        order = [v for v in scope if v in f.free]
        arr = self.ev.ordered(f, order)
        shape = [self.size if v in f.free else 1 for v in scope]
        return np.broadcast_to(arr.reshape(shape), (self.size,) * len(scope))

    def grow(self, k: int, done: List[List[Entry]]) -> Iterator[Entry]:
        if not done:
            scope = _scope(self.n, k)
            for f in _atoms(self.sig, self.n, k):
                arr = self._spread(f, scope)
                if self._fresh(k, f.free, arr):
                    yield f, arr
            return

        last = done[-1]
        for phi, a in last:
            if isinstance(phi, Not):
                continue
            arr = ~a
            if self._fresh(k, phi.free, arr):
                yield Not(phi), arr
        lower = list(chain.from_iterable(done[:-1]))
        for j, (phi, a) in enumerate(last):
            for psi, b in chain(lower, last[:j]):
                free = phi.free | psi.free
                for cls, arr in ((And, a & b), (Or, a | b)):
                    if self._fresh(k, free, arr):
                        yield cls(_pair(phi, psi)), arr

        y = bound_name(k+1)
        axis = self.n + k
        for phi, a in self.layers(k+1, len(done)-1)[-1]:
            if y not in phi.free:
                continue
            free = phi.free - {y}
            for cls, arr in ((Exists, a.any(axis=axis)),
                    (Forall, a.all(axis=axis))):
                if self._fresh(k, free, arr):
                    yield cls(y, phi), arr


def distinct_formulas(s: Structure, depth: int,
        free_count: int) -> Iterator[Formula]:
    """
    Formulas of ``enumerate_formulas(s.signature, depth, free_count)``
    thinned to one per truth set on s, shallowest first. Lazy in the
    deepest layer, so a caller that stops early does not pay for it.
    """
    _validate(depth, free_count)
    search = _TableSearch(s, normalize_signature(s.signature), free_count)
    want = frozenset(free_names(free_count))
    done = search.layers(0, depth-1) if depth else []
    entries = chain(chain.from_iterable(done), search.grow(0, list(done)))
    return (f for f, _ in entries if f.free == want)


def random_formula(rng, signature, free: Sequence[str],
        depth: int) -> Formula:
    """
    Random formula of depth at most ``depth`` in which every name of
    ``free`` occurs free. Uses every connective, ``->``, ``<->`` and
    ``existsu`` included.

    :param rng: A ``random.Random``.
    """
    sig = normalize_signature(signature)
    f = _random(rng, sig, tuple(free), depth, 0)
    missing = sorted(set(free) - f.free)
    if missing:
        f = And((f,) + tuple(Eq(v, v) for v in missing))
    return f


_CONNECTIVES = ("not", "and", "or", "implies", "iff", "exists", "forall",
    "existsu")
_QUANTIFIERS = {"exists": Exists, "forall": Forall, "existsu": ExistsUnique}


def _random(rng, sig: Signature, scope: Tuple[str, ...], depth: int,
        level: int) -> Formula:
    if depth == 0 or rng.random() < 0.25:
        pick = rng.randrange(len(sig) + 1)
        if pick == len(sig):
            return Eq(rng.choice(scope), rng.choice(scope))
        rel, arity = sig[pick]
        return Atom(rel, tuple(rng.choice(scope) for _ in range(arity)))

    op = rng.choice(_CONNECTIVES)
    if op == "not":
        return Not(_random(rng, sig, scope, depth-1, level))
    if op in ("and", "or", "implies", "iff"):
        left = _random(rng, sig, scope, depth-1, level)
        right = _random(rng, sig, scope, depth-1, level)
        if op == "and":
            return And((left, right))
        if op == "or":
            return Or((left, right))
        return Implies(left, right) if op == "implies" else Iff(left, right)

    y = bound_name(level+1)
    body = _random(rng, sig, scope + (y,), depth-1, level+1)
    return _QUANTIFIERS[op](y, body)
