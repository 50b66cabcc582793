"""
Binary relation taxonomy, cyclic orders, linearization and right segments.
"""

import pytest

from umt.algebra import relation_algebra
from umt.errors import *
from umt.families import linear_chain, single_relation, total_preorder
from umt.taxonomy import (Tri, classify_binary, classify_cyclic, is_trivial,
    is_very_simple, linearize, right_segments, square_inclusion)


def _with(s, expr, name="T"):
    return s.with_relation(relation_algebra(s, expr, name))


def test_strict_chain(l3):
    info = classify_binary(l3, "R")
    assert info.irreflexive and info.antisymmetric and info.linear
    assert info.reflexive == Tri.ANTI
    assert info.transitive == Tri.HOLDS
    assert info.strict_order and info.linear_order and not info.order
    assert not info.dense and info.discrete
    assert info.has_least and info.has_greatest
    assert info.well_order
    assert info.witnesses["dense"] == (0, 1)


def test_reflexive_chain(chain3):
    info = classify_binary(chain3, "R")
    assert info.reflexive == Tri.HOLDS
    assert info.order and info.total_preorder and info.linear_order
    assert not info.equivalence


def test_equivalence_and_distinguishability(l3):
    off = _with(l3, "complement(diag)")
    info = classify_binary(off, "T")
    assert info.distinguishability
    assert info.symmetric == Tri.HOLDS
    assert info.transitive == Tri.ANTI

    diag = _with(l3, "diag")
    info = classify_binary(diag, "T")
    assert info.equivalence and not info.distinguishability


def test_witnesses_are_counterexamples(c3):
    info = classify_binary(c3, "R")
    x, y, z = info.witnesses["transitive"]
    a = c3.binary("R")
    assert a[x, y] and a[y, z] and not a[x, z]
    assert info.symmetric == Tri.ANTI
    assert not info.has_least and not info.has_greatest


def test_to_dict(l3):
    data = classify_binary(l3, "R").to_dict()
    assert data["strict_order"] is True
    assert data["dense"] is False
    assert data["witnesses"]["dense"] == [0, 1]


def test_empty_universe():
    s = single_relation(0, "R", [])
    info = classify_binary(s, "R")
    assert info.reflexive == Tri.HOLDS
    assert not info.has_least


def test_cyclic_z4(z4):
    info = classify_cyclic(z4, "C")
    assert info.asymmetry3 and info.transitivity3 and info.cyclicity
    assert info.completeness3 and info.cyclic_order
    assert not info.dense3


def test_cyclic_degenerate():
    empty = single_relation(3, "C", [], arity=3)
    info = classify_cyclic(empty, "C")
    assert info.asymmetry3 and not info.completeness3

    both = single_relation(3, "C", [(0, 1, 2), (2, 1, 0)], arity=3)
    info = classify_cyclic(both, "C")
    assert not info.asymmetry3
    assert info.witnesses["asymmetry3"] == (0, 1, 2)

    with pytest.raises(ArityMismatch):
        classify_cyclic(linear_chain(3), "R")


def test_linearize(l3):
    off = _with(l3, "complement(diag)")
    assert set(linearize(off, "T")) == {(0, 1), (0, 2), (1, 2)}

    across = single_relation(3, "D", [(0, 2), (2, 0), (1, 2), (2, 1)])
    order = linearize(across, "D")
    assert order.name == "D_lin"
    assert set(order) == {(0, 1), (0, 2), (1, 2)}

    assert len(linearize(single_relation(1, "D", []), "D")) == 0
    with pytest.raises(NotDistinguishability):
        linearize(l3, "R")


def test_right_segments(chain3):
    report = right_segments(chain3, "R")
    assert report.proper_segments == [(2,), (1, 2)]
    assert report.principal_upsets == [(0, 1, 2), (1, 2), (2,)]
    assert report.injective and report.order_reversing

    one = right_segments(single_relation(1, "R", [(0, 0)]), "R")
    assert one.proper_segments == []
    assert one.principal_upsets == [(0,)]

    assert right_segments(linear_chain(2), "R").proper_segments == [(1,)]


def test_right_segments_need_order(c3):
    with pytest.raises(NotAnOrder):
        right_segments(c3, "R")
    with pytest.raises(NotAnOrder):
        right_segments(total_preorder([[0, 1], [2]], "R"), "R")


@pytest.mark.parametrize("n", range(2, 7))
def test_right_segments_of_chains(n):
    report = right_segments(linear_chain(n, strict=False), "R")
    assert len(report.proper_segments) == n - 1
    assert len(report.principal_upsets) == n
    assert report.order_reversing


def test_square_inclusion(l3):
    assert square_inclusion(l3, "R") == "strict"
    assert square_inclusion(_with(l3, "diag"), "T") == "equal"
    assert square_inclusion(_with(l3, "complement(diag)"), "T") == "superset"


def test_trivial_and_very_simple(l3, c3):
    for expr in ("R - R", "diag", "complement(diag)", "full"):
        assert is_trivial(_with(l3, expr), "T")
    assert not is_trivial(l3, "R")
    assert is_very_simple(l3, "R")
    assert not is_very_simple(c3, "R")
