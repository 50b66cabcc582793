"""
Relation algebra expressions.
"""

import numpy as np
import pytest

from umt.algebra import compose, converse, relation_algebra
from umt.errors import *
from umt.families import cyclic_order, single_relation


def test_square_of_chain(l3):
    sq = relation_algebra(l3, "R ∘ R")
    assert set(sq) == {(0, 2)}
    assert set(sq) < set(l3.table("R"))
    assert set(relation_algebra(l3, "R ; R")) == {(0, 2)}


def test_complement(l3):
    off = relation_algebra(l3, "complement(diag)")
    assert len(off) == 6
    assert all(x != y for x, y in off)
    assert set(relation_algebra(l3, "complement(complement(R))")) \
        == set(l3.table("R"))
    assert set(relation_algebra(l3, "~~R")) == set(l3.table("R"))


def test_converse_and_sets(l3):
    conv = relation_algebra(l3, "R^-1", "S")
    assert conv.name == "S"
    assert set(conv) == {(1, 0), (2, 0), (2, 1)}
    assert len(relation_algebra(l3, "R | R^-1 | diag")) == 9
    assert len(relation_algebra(l3, "R & R^-1")) == 0
    assert len(relation_algebra(l3, "full - R")) == 6
    assert set(relation_algebra(l3, "converse(R) ∘ R")) \
        == {(1, 1), (2, 2), (1, 2), (2, 1)}


def test_precedence(l3):
    # ∘ binds tighter than |
    a = relation_algebra(l3, "diag | R ∘ R")
    b = relation_algebra(l3, "(diag | R) ∘ R")
    assert set(a) == {(0, 0), (1, 1), (2, 2), (0, 2)}
    assert set(b) == set(l3.table("R"))


def test_errors(l3):
    with pytest.raises(UnknownRelation):
        relation_algebra(l3, "S")
    with pytest.raises(StructureSyntaxError):
        relation_algebra(l3, "R ∘")
    with pytest.raises(StructureSyntaxError):
        relation_algebra(l3, "(R")
    with pytest.raises(NonBinaryOperand):
        relation_algebra(cyclic_order(3), "C ∘ C")


def test_compose_matches_definition():
    s = single_relation(4, "R", [(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)])
    a = s.binary("R")
    expected = np.zeros((4, 4), dtype=bool)
    for x in range(4):
        for y in range(4):
            for z in range(4):
                if a[x, y] and a[y, z]:
                    expected[x, z] = True
    assert (compose(a, a) == expected).all()
    assert (converse(converse(a)) == a).all()
