"""
Verification campaigns.

Each campaign checks a family of claims exhaustively at small sizes and
returns a CampaignReport. Campaigns only combine the library checks; none
of them re-implements a property it tests.

Exhaustive scans split the code range into chunks (``miner.chunk_bits``)
and run them on ``miner.workers`` processes. Chunk results are merged in
chunk order, so reports do not depend on scheduling.
"""

import random
import time
from functools import lru_cache, partial
from itertools import permutations, product
from multiprocessing import Pool
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from sympy import isprime
from tqdm import tqdm

from .. import config, logger
from ..algebra import relation_algebra
from ..aut import (automorphism_group, canonical_code,
    structure_code, subset_types_uniform)
from ..config import DefaultSettings
from ..errors import *
from ..families import (circulant_tournament, cyclic_order, linear_chain,
    quadratic_residues, single_relation, total_preorder)
from ..formula import (factorial_closure, free_names, random_formula,
    truth_set)
from ..schemes import (Mode, check_F, check_Q, check_Q1, check_uniformity,
    uniformity_degrees)
from ..structure import Structure, format_structure, permute_structure
from ..taxonomy import (Tri, classify_binary, classify_cyclic, is_trivial,
    is_very_simple)
from .enumerate import (EnumerationSpec, chunk_codes, chunks,
    count_unlabeled, enumerate_structures, relabel_maps)
from .report import CampaignReport

ORBITS = Mode(Mode.ORBITS)
SUBSETS = Mode(Mode.SUBSETS)
BINARY = (("R", 2),)

Outcome = List[Tuple[int, Any]]


# Parallel scan

def _init_worker(values: Mapping[str, Mapping[str, Any]], level: str) -> None:
    settings = DefaultSettings()
    for group, props in values.items():
        for key, value in props.items():
            settings.override(f"{group}.{key}", value)
    config.use(settings)
    logger.set_level(level)


@lru_cache(maxsize=8)
def _maps(n: int, signature, labeled: bool):
    if labeled:
        return None
    return relabel_maps(EnumerationSpec(n, signature, labeled))


def _scan_chunk(job) -> Outcome:
    n, signature, labeled, probe, start, stop = job
    spec = EnumerationSpec(n, signature, labeled)
    out = []
    for code in chunk_codes(spec, start, stop, _maps(n, signature, labeled)):
        code = int(code)
        result = probe(spec.decode(code))
        if result is not None:
            out.append((code, result))
    return out


def scan(spec: EnumerationSpec, probe: Callable[[Structure], Any],
        desc: str = "Scanning") -> Outcome:
    """
    ``(code, probe(s))`` for every enumerated structure whose probe result
    is not None, in code order.

    :param probe: Module level function (or partial of one), so that worker
        processes can receive it.
    """
    spec.check()
    settings = config.current()
    workers = settings.miner.workers.value()
    jobs = [(spec.universe_size, spec.signature, spec.labeled, probe, a, b)
        for a, b in chunks(spec)]
    logger.debug(f"{desc}: {spec.count} codes in {len(jobs)} chunks, "
        f"{workers} workers")

    bar = partial(tqdm, total=len(jobs), desc=desc, leave=False,
        disable=not settings.miner.progress.value())
    out = []
    if workers == 1 or len(jobs) == 1:
        for part in bar(map(_scan_chunk, jobs)):
            out.extend(part)
        return out

    values = settings.values()._as_dict()
    with Pool(workers, initializer=_init_worker,
            initargs=(values, logger.get_level())) as pool:
        for part in bar(pool.imap(_scan_chunk, jobs)):
            out.extend(part)
    return out


def _text(s: Structure) -> str:
    return format_structure(s)


# Probes. Module level so they pickle.

def _probe_uniform(s: Structure) -> Tuple[bool, bool]:
    types1 = subset_types_uniform(s, 1)
    types2 = subset_types_uniform(s, 2)
    if not (types1 or types2):
        return False, False
    group = automorphism_group(s) if s.universe_size > 1 else None
    u1 = types1 and check_uniformity(s, 1, ORBITS, group=group).holds
    u2 = types2 and check_uniformity(s, 2, ORBITS, group=group).holds
    return u1, u2


def _probe_q(s: Structure) -> Tuple[bool, bool]:
    return check_Q(s, "R", SUBSETS).holds, check_F(s, "R").holds


def _probe_q1(s: Structure) -> Optional[bool]:
    return True if check_Q1(s, "R", SUBSETS).holds else None


def _probe_duality(s: Structure) -> Tuple[bool, bool]:
    comp = relation_algebra(s, "complement(R)", "C")
    dual = s.with_relation(comp)
    return classify_binary(s, "R").equivalence, \
        classify_binary(dual, "C").distinguishability


def _probe_soundness(depth: int, max_n: int, s: Structure):
    group = automorphism_group(s) if s.universe_size > 1 else None
    out = []
    for n in range(1, max_n+1):
        orbit = check_uniformity(s, n, ORBITS, group=group).holds
        formula = check_uniformity(s, n, Mode(Mode.FORMULAS, depth)).holds
        out.append((orbit, formula))
    return tuple(out)


# Campaigns

def lemma1_finite(report: CampaignReport, max_size: int, depth: int) -> None:
    """
    Finite chains are not 1-uniform: a formula of small depth separates
    their elements, and the point orbits confirm it.
    """
    witnesses = []
    all_ok = True
    extrema = True
    for n in range(2, max_size+1):
        for strict in (True, False):
            s = linear_chain(n, strict)
            orbit = check_uniformity(s, 1, ORBITS)
            formula = check_uniformity(s, 1, Mode(Mode.FORMULAS, depth))
            ok = not orbit.holds and not formula.holds
            all_ok &= ok
            extrema &= is_very_simple(s, "R")
            report.tally("chains")
            report.tally("not_uniform", int(ok))
            witnesses.append({
                "chain": f"{'strict' if strict else 'reflexive'}-{n}",
                "indicator": None if formula.holds
                    else formula.witness_formula.text,
                "satisfied_at": None if formula.holds
                    else list(formula.witness_tuple),
                "point_orbits": len(orbit.orbit_classes or ()) or 1,
            })
    report.add("chains-not-1-uniform", all_ok, witnesses=witnesses)
    report.add("chains-have-extrema", extrema, asserted=False,
        detail="Every finite chain has a least and a greatest element.")


def two_implies_one(report: CampaignReport, size: int) -> None:
    """
    Count 1- and 2-uniform structures with one binary relation and check
    that 2-uniformity implies 1-uniformity above two elements.
    """
    spec = EnumerationSpec(size, BINARY)
    results = scan(spec, _probe_uniform, "two-implies-one")
    report.tally("structures", spec.count)
    counter = []
    two = []
    for code, (u1, u2) in results:
        report.tally("uniform1", int(u1))
        report.tally("uniform2", int(u2))
        if u2:
            two.append(code)
            if not u1:
                counter.append(_text(spec.decode(code)))
    report.tally("counterexamples", len(counter))

    report.add("two-uniform-implies-one-uniform", not counter,
        asserted=size > 2, witnesses=counter,
        detail="" if size > 2 else "On two elements every structure is "
            "2-uniform.")
    trivial = all(is_trivial(spec.decode(c), "R") for c in two)
    report.add("two-uniform-are-trivial", trivial, asserted=size >= 4,
        witnesses=[_text(spec.decode(c)) for c in two])


def _reflexive_orders(n: int) -> set:
    chain = linear_chain(n, strict=False)
    return {structure_code(permute_structure(chain, p))
        for p in permutations(range(n))}


def theorem4_count(report: CampaignReport, size: int) -> None:
    """
    Q (over all subsets) holds exactly for the reflexive linear orders, and
    F holds for the same structures.
    """
    spec = EnumerationSpec(size, BINARY)
    results = scan(spec, _probe_q, "theorem4-count")
    q_pass = {code for code, (q, _) in results if q}
    f_pass = {code for code, (_, f) in results if f}
    orders = _reflexive_orders(size)

    report.tally("structures", spec.count)
    report.tally("passing", len(q_pass))
    report.tally("f_passing", len(f_pass))
    report.tally("reflexive_linear_orders", len(orders))
    report.add("q-passers-are-reflexive-linear-orders", q_pass == orders,
        witnesses=[_text(spec.decode(c)) for c in sorted(q_pass ^ orders)])
    report.add("f-passers-identical", f_pass == q_pass,
        witnesses=[_text(spec.decode(c)) for c in sorted(f_pass ^ q_pass)])


def f_q_crosscheck(report: CampaignReport, size: int) -> None:
    """
    F and Q over subsets agree on every structure; every passer is a
    reflexive, antisymmetric, transitive and linear relation.
    """
    spec = EnumerationSpec(size, BINARY)
    results = scan(spec, _probe_q, "f-q-crosscheck")
    disagree = [code for code, (q, f) in results if q != f]
    report.tally("structures", spec.count)
    report.tally("agree", spec.count - len(disagree))
    report.tally("passing", sum(1 for _, (q, _) in results if q))
    report.add("f-agrees-with-q", not disagree,
        witnesses=[_text(spec.decode(c)) for c in disagree])

    bad = []
    for code, (q, _) in results:
        if not q:
            continue
        info = classify_binary(spec.decode(code), "R")
        if not (info.reflexive == Tri.HOLDS and info.antisymmetric
                and info.transitive == Tri.HOLDS and info.linear):
            bad.append(_text(spec.decode(code)))
    report.add("q-passers-are-orders", not bad, witnesses=bad)


def cyclic_ladder(report: CampaignReport, min_size: int,
        max_size: int) -> None:
    """
    Standard cyclic orders on Z_n: the cyclic order axioms hold, the
    structure is 1-uniform, and 2-uniform only on three elements.
    """
    axioms = ("asymmetry3", "transitivity3", "cyclicity", "completeness3")
    rows = []
    axioms_ok = one_ok = two_ok = True
    for n in range(min_size, max_size+1):
        s = cyclic_order(n)
        info = classify_cyclic(s, "C")
        group = automorphism_group(s)
        u1 = check_uniformity(s, 1, ORBITS, group=group).holds
        u2 = check_uniformity(s, 2, ORBITS, group=group).holds
        axioms_ok &= all(getattr(info, a) for a in axioms)
        one_ok &= u1
        two_ok &= u2 == (n == 3)
        report.tally("structures")
        rows.append({"n": n, "group_order": group.order, "axioms": all(
            getattr(info, a) for a in axioms), "dense3": info.dense3,
            "uniform1": u1, "uniform2": u2})

    report.add("cyclic-axioms", axioms_ok, witnesses=rows)
    report.add("one-uniform", one_ok)
    report.add("two-uniform-iff-three", two_ok)
    if min_size <= 4 <= max_size:
        degrees = uniformity_degrees(cyclic_order(4), 4)
        report.add("z4-degrees", degrees == [1, 3, 4], witnesses=[degrees])
    report.add("finite-cyclic-not-dense",
        not any(r["dense3"] for r in rows), asserted=False)


def paley_probe(report: CampaignReport, p: int) -> None:
    """
    Paley tournament on p elements: its group has order p(p-1)/2; it is
    1- and 2-uniform but not 3-uniform for p >= 7. Also records the
    3-element cyclic tournament, uniform at every level.
    """
    if not isprime(p) or p % 4 != 3:
        raise SettingError(f"paley-probe needs a prime p = 3 mod 4, got {p}.")
    s = circulant_tournament(p, quadratic_residues(p))
    group = automorphism_group(s)
    levels = {n: check_uniformity(s, n, ORBITS, group=group) for n in (1, 2, 3)}
    report.tally("group_order", group.order)
    report.tally("uniform_levels", sum(v.holds for v in levels.values()))

    report.add("group-order", group.order == p * (p-1) // 2,
        witnesses=[group.order])
    report.add("one-and-two-uniform", levels[1].holds and levels[2].holds)
    three = levels[3]
    report.add("not-three-uniform", not three.holds, asserted=p >= 7,
        witnesses=[[[list(t) for t in c] for c in three.orbit_classes]]
            if not three.holds else [])
    report.add("finite-uniformity-tension",
        levels[1].holds and levels[2].holds and not three.holds,
        asserted=False, witnesses=[_text(s)],
        detail="1- and 2-uniform over a binary signature, yet not "
            "3-uniform.")

    c3 = single_relation(3, "R", [(0, 1), (1, 2), (2, 0)])
    c3_levels = uniformity_degrees(c3, 3)
    report.add("c3-boundary", c3_levels == [1, 2, 3]
        and not is_trivial(c3, "R"), asserted=False, witnesses=[_text(c3)],
        detail="A nontrivial structure on three elements, uniform at "
            "every level.")


def _total_preorders(n: int):
    for ranks in product(range(n), repeat=n):
        k = max(ranks) + 1 if n else 0
        if set(ranks) == set(range(k)):
            yield [[e for e in range(n) if ranks[e] == i] for i in range(k)]


def q1_preorders(report: CampaignReport, size: int,
        max_preorder: int) -> None:
    """
    Every total preorder passes Q1 over invariant sets; every structure
    passing Q1 over all subsets is a total preorder.
    """
    failing = []
    for n in range(1, max_preorder+1):
        for classes in _total_preorders(n):
            s = total_preorder(classes, "R")
            report.tally("preorders")
            if check_Q1(s, "R", ORBITS).holds:
                report.tally("preorders_passing")
            else:
                failing.append(_text(s))
    report.add("total-preorders-pass-orbits", not failing, witnesses=failing)

    spec = EnumerationSpec(size, BINARY)
    results = scan(spec, _probe_q1, "q1-preorders")
    report.tally("structures", spec.count)
    report.tally("subsets_passing", len(results))
    bad = []
    for code, _ in results:
        info = classify_binary(spec.decode(code), "R")
        if not info.total_preorder:
            bad.append(_text(spec.decode(code)))
    report.add("subsets-passers-are-total-preorders", not bad, witnesses=bad)


KNOWN_UNLABELED = {1: 2, 2: 10, 3: 104, 4: 3044}


def iso_counts(report: CampaignReport, max_size: int) -> None:
    """
    Unlabelled enumeration against two oracles: distinct canonical codes
    of all labelled structures, and Burnside's count.
    """
    rows = []
    agree = True
    for n in range(1, max_size+1):
        spec = EnumerationSpec(n, BINARY, labeled=False)
        found = sum(1 for _ in enumerate_structures(spec))
        labeled = EnumerationSpec(n, BINARY)
        oracle = len({canonical_code(s) for s in enumerate_structures(labeled)})
        burnside = count_unlabeled(n, BINARY)
        expected = KNOWN_UNLABELED.get(n, burnside)
        agree &= found == oracle == burnside == expected
        report.tally(f"unlabeled_{n}", found)
        rows.append({"n": n, "labeled": labeled.count, "unlabeled": found,
            "canonical_oracle": oracle, "burnside": burnside})
    report.add("counts-agree", agree, witnesses=rows)


def taxonomy_duality(report: CampaignReport, size: int) -> None:
    """
    A relation is an equivalence iff its complement is a
    distinguishability.
    """
    spec = EnumerationSpec(size, BINARY)
    results = scan(spec, _probe_duality, "taxonomy-duality")
    bad = [code for code, (eq, dist) in results if eq != dist]
    report.tally("structures", spec.count)
    report.tally("equivalences", sum(1 for _, (eq, _) in results if eq))
    report.add("equivalence-complement-duality", not bad,
        witnesses=[_text(spec.decode(c)) for c in bad])


def soundness_coupling(report: CampaignReport, size: int, depth: int,
        max_n: int) -> None:
    """
    A formula violating a uniformity instance defines a non-invariant
    set, so the orbit check must fail too. Also measures how often bounded
    formulas miss a violation the orbits see.
    """
    spec = EnumerationSpec(size, BINARY)
    probe = partial(_probe_soundness, depth, max_n)
    results = scan(spec, probe, "soundness-coupling")
    report.tally("structures", spec.count)
    unsound = []
    gaps = {}
    for code, levels in results:
        for n, (orbit, formula) in enumerate(levels, start=1):
            if orbit and not formula:
                unsound.append({"n": n, "structure": _text(spec.decode(code))})
            if formula and not orbit:
                gaps[n] = gaps.get(n, 0) + 1
    for n in range(1, max_n+1):
        report.tally(f"gap_{n}", gaps.get(n, 0))
    report.add("formulas-sound", not unsound, witnesses=unsound)
    report.add("completeness-gap", not gaps, asserted=False,
        witnesses=[gaps], detail="Structures uniform per bounded formulas "
            "but not per orbits, by level.")


def factorial_check(report: CampaignReport, count: int, max_universe: int,
        max_free: int, depth: int) -> None:
    """
    The truth set of a factorial closure is the permutation closure of the
    truth set, on seeded random formulas and structures.
    """
    rng = random.Random(config.current().miner.seed.value())
    sig = {"P": 1, "R": 2}
    bad = []
    for _ in range(count):
        n = rng.randint(1, max_universe)
        s = Structure(n, [
            single_relation(n, "P", [(e,) for e in range(n)
                if rng.random() < 0.5], arity=1).table("P"),
            single_relation(n, "R", [t for t in product(range(n), repeat=2)
                if rng.random() < 0.4]).table("R"),
        ])
        names = free_names(rng.randint(1, max_free))
        f = random_formula(rng, sig, names, depth)
        base = truth_set(s, f, names)
        closed = {t for t in product(range(n), repeat=len(names))
            if any(p in base for p in permutations(t))}
        report.tally("formulas")
        if truth_set(s, factorial_closure(f, names), names) != closed:
            bad.append({"formula": f.text, "structure": _text(s)})
    report.add("closure-matches-permutations", not bad, witnesses=bad)


class Campaign:
    """
    Catalog entry: the function and its parameters with defaults.

    :param size_key: Parameter that ``size`` stands for.
    :param enumerates: The size parameter is an exhaustive enumeration size,
        capped by ``limits.miner_universe``.
    """

    def __init__(self, func: Callable, defaults: Mapping[str, int],
            size_key: Optional[str] = None, enumerates: bool = False) -> None:
        self.func = func
        self.defaults = dict(defaults)
        self.size_key = size_key
        self.enumerates = enumerates

    @property
    def summary(self) -> str:
        doc = (self.func.__doc__ or "").strip().split("\n\n")[0]
        return " ".join(doc.split())


CATALOG: Dict[str, Campaign] = {
    "lemma1-finite": Campaign(lemma1_finite, {"max_size": 6, "depth": 2},
        "max_size"),
    "two-implies-one": Campaign(two_implies_one, {"size": 3}, "size", True),
    "theorem4-count": Campaign(theorem4_count, {"size": 3}, "size", True),
    "f-q-crosscheck": Campaign(f_q_crosscheck, {"size": 3}, "size", True),
    "cyclic-ladder": Campaign(cyclic_ladder, {"min_size": 3, "max_size": 7},
        "max_size"),
    "paley-probe": Campaign(paley_probe, {"p": 7}, "p"),
    "q1-preorders": Campaign(q1_preorders, {"size": 3, "max_preorder": 4},
        "size", True),
    "iso-counts": Campaign(iso_counts, {"max_size": 3}, "max_size", True),
    "taxonomy-duality": Campaign(taxonomy_duality, {"size": 3}, "size", True),
    "soundness-coupling": Campaign(soundness_coupling,
        {"size": 3, "depth": 3, "max_n": 3}, "size", True),
    "factorial-closure": Campaign(factorial_check, {"count": 100,
        "max_universe": 4, "max_free": 3, "depth": 3}, "max_universe"),
}


def run_campaign(name: str,
        params: Optional[Mapping[str, int]] = None) -> CampaignReport:
    """
    Run a catalog campaign.

    :param params: Overrides of the campaign's defaults. ``size`` is
        accepted by every campaign and sets its size parameter.
    """
    if name not in CATALOG:
        raise UnknownCampaign(f"No campaign named {name!r}; known: "
            f"{', '.join(CATALOG)}.")
    entry = CATALOG[name]
    values = dict(entry.defaults)
    for key, value in (params or {}).items():
        if key == "size":
            key = entry.size_key
        if key not in values:
            raise SettingError(f"Campaign {name} has no parameter {key!r}.")
        values[key] = int(value)

    cap = config.current().limits.miner_universe.value()
    if entry.enumerates and values[entry.size_key] > cap:
        raise SizeCapExceeded(f"Size {values[entry.size_key]} exceeds the "
            f"miner limit {cap}.")

    logger.info(f"Campaign {name} with {values}")
    report = CampaignReport(name, values)
    start = time.perf_counter()
    entry.func(report, **values)
    report.wall_time = time.perf_counter() - start
    logger.info(f"Campaign {name} finished in {report.wall_time:.1f}s")
    return report
