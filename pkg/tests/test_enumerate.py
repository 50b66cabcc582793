"""
Formula enumeration and random formulas.
"""

import random

import pytest

from umt.errors import *
from umt.families import empty_structure, linear_chain
from umt.formula import (Exists, Formula, canonical, count_formulas,
    distinct_formulas, enumerate_formulas, free_names, parse_formula,
    random_formula, truth_set)

SIG = {"R": 2}


def test_atomic_layer():
    found = list(enumerate_formulas(SIG, 0, 1))
    assert parse_formula("R(x1,x1)") in found
    assert parse_formula("x1=x1") in found
    assert len(found) == 2


def test_depth_one_quantifiers():
    found = set(enumerate_formulas(SIG, 1, 1))
    assert Exists("y1", parse_formula("R(x1,y1)")) in found
    assert Exists("y1", parse_formula("R(y1,x1)")) in found


def test_sentences():
    assert count_formulas(SIG, 0, 0) == 0
    found = [f.text for f in enumerate_formulas(SIG, 1, 0)]
    assert found == ["exists y1. R(y1,y1)", "forall y1. R(y1,y1)"]


def test_free_variables_exact():
    names = frozenset(free_names(2))
    for f in enumerate_formulas(SIG, 2, 2):
        assert f.free == names


def test_no_duplicates():
    found = list(enumerate_formulas(SIG, 2, 1))
    assert len(set(found)) == len(found)
    assert len({canonical(f) for f in found}) == len(found)


def test_deterministic_and_monotone():
    a = list(enumerate_formulas(SIG, 2, 1))
    assert a == list(enumerate_formulas(SIG, 2, 1))
    b = list(enumerate_formulas(SIG, 1, 1))
    assert a[:len(b)] == b


def test_signature_forms():
    assert list(enumerate_formulas({"R": 2}, 1, 1)) \
        == list(enumerate_formulas((("R", 2),), 1, 1))


def test_limits(settings):
    with pytest.raises(DepthLimit):
        list(enumerate_formulas(SIG, 5, 1))
    with pytest.raises(DepthLimit):
        list(enumerate_formulas(SIG, -1, 1))
    with pytest.raises(BadLevel):
        list(enumerate_formulas(SIG, 1, -1))
    settings.limits.formula_depth = 1
    with pytest.raises(DepthLimit):
        list(enumerate_formulas(SIG, 2, 1))


def test_random_formula():
    rng = random.Random(7)
    for _ in range(50):
        f = random_formula(rng, {"P": 1, "R": 2}, ["x1", "x2"], 3)
        assert isinstance(f, Formula)
        assert f.free == {"x1", "x2"}
        assert parse_formula(f.text) == f


def test_random_formula_seeded():
    a = random_formula(random.Random(3), SIG, ["x1"], 3)
    b = random_formula(random.Random(3), SIG, ["x1"], 3)
    assert a == b


def test_connectives_join_quantified_formulas():
    f = parse_formula("(exists y1. R(x1,y1)) | (exists y1. R(y1,x1))")
    assert f not in set(enumerate_formulas(SIG, 1, 1))
    assert f in set(enumerate_formulas(SIG, 2, 1))
    g = parse_formula("!(forall y1. R(y1,x1)) & (exists y1. R(x1,y1))")
    assert g in set(enumerate_formulas(SIG, 3, 1))


def test_layers_by_nesting_depth():
    one = set(enumerate_formulas(SIG, 1, 1))
    assert parse_formula("!R(x1,x1)") in one
    assert parse_formula("R(x1,x1) & x1=x1") in one
    assert parse_formula("R(x1,x1) & !(x1=x1)") not in one


def test_distinct_formulas_reach_every_truth_set():
    s = linear_chain(3)
    full = {truth_set(s, f, ["x1"]) for f in enumerate_formulas(SIG, 2, 1)}
    found = [truth_set(s, f, ["x1"]) for f in distinct_formulas(s, 2, 1)]
    assert len(found) == len(set(found))
    assert set(found) == full


def test_distinct_formulas_two_free():
    s = linear_chain(3)
    names = ["x1", "x2"]
    full = {truth_set(s, f, names) for f in enumerate_formulas(SIG, 1, 2)}
    found = {truth_set(s, f, names) for f in distinct_formulas(s, 1, 2)}
    assert found == full
    bare = empty_structure(3)
    sets = [truth_set(bare, f, ["x1"]) for f in distinct_formulas(bare, 2, 1)]
    assert sets == [frozenset({(0,), (1,), (2,)}), frozenset()]
    with pytest.raises(DepthLimit):
        list(distinct_formulas(s, 9, 1))
