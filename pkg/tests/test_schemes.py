"""
Uniformity, indicators and the atomicity schemes.
"""

import pytest

from umt.errors import *
from umt.families import (cyclic_order, empty_structure, linear_chain,
    single_relation, total_preorder)
from umt.formula import evaluate, free_names, parse_formula
from umt.schemes import *
from umt.structure import Structure

ORBITS = Mode(Mode.ORBITS)


def test_mode_parse():
    assert Mode.parse("formulas:3") == Mode(Mode.FORMULAS, 3)
    assert Mode.parse("formulas").depth == 2
    assert str(Mode.parse(" orbits ")) == "orbits"
    assert str(Mode(Mode.FORMULAS, 1)) == "formulas:1"
    assert Mode.parse(ORBITS) is ORBITS
    with pytest.raises(BadMode):
        Mode.parse("sets")
    with pytest.raises(BadMode):
        Mode(Mode.ORBITS, 2)


def test_chain_not_one_uniform(l3):
    v = check_uniformity(l3, 1, "orbits")
    assert not v.holds
    assert v.orbit_classes == [((0,),), ((1,),), ((2,),)]
    assert recheck(l3, v)

    v = check_uniformity(l3, 1, "formulas:1")
    assert not v.holds
    f = v.witness_formula
    assert f.free == {"x1"}
    assert evaluate(l3, f, {"x1": v.witness_tuple[0]})
    assert not evaluate(l3, f, {"x1": v.falsifying_tuple[0]})
    assert recheck(l3, v)


def test_single_instance(l3):
    f = parse_formula("exists y. R(x,y)")
    v = check_uniformity(l3, 1, f=f)
    assert not v.holds and v.mode == "formula"
    assert v.witness_tuple == (0,) and v.falsifying_tuple == (2,)
    assert check_uniformity(l3, 1, f=parse_formula("x=x")).holds
    with pytest.raises(ArityMismatch):
        check_uniformity(l3, 2, f=f)


def test_uniform_structures(z4, c3):
    assert check_uniformity(z4, 1, ORBITS).holds
    assert check_uniformity(z4, 1, "formulas:2").holds
    assert check_uniformity(c3, 2, ORBITS).holds
    assert not check_uniformity(z4, 2, ORBITS).holds


def test_vacuous_levels(l3):
    v = check_uniformity(l3, 5, ORBITS)
    assert v.holds and v.vacuous
    v = check_uniformity(l3, 3, ORBITS)
    assert v.holds and not v.vacuous


def test_empty_universe():
    v = check_uniformity(Structure(0), 1, ORBITS)
    assert v.holds and v.warnings
    s = single_relation(0, "R", [])
    assert check_Q(s, "R").holds
    assert check_F(s, "R").vacuous


def test_uniformity_errors(l3):
    with pytest.raises(BadLevel):
        check_uniformity(l3, 0)
    with pytest.raises(BadMode):
        check_uniformity(l3, 1, "subsets")


def test_default_mode(settings, l3):
    settings.schemes.uniformity_mode = "formulas:1"
    assert check_uniformity(l3, 1).mode == "formulas:1"


def test_degrees(z4, c3, l3):
    assert uniformity_degrees(z4, 4) == [1, 3, 4]
    assert uniformity_degrees(c3, 3) == [1, 2, 3]
    assert uniformity_degrees(l3, 2) == []
    assert uniformity_degrees(l3, 3) == [3]


def test_formulas_mode_is_sound():
    for s in (linear_chain(3), cyclic_order(4), total_preorder([[0], [1, 2]])):
        for n in (1, 2):
            if not check_uniformity(s, n, "formulas:2").holds:
                assert not check_uniformity(s, n, ORBITS).holds


def test_indicators(l3):
    found = find_indicators(l3, 1)
    texts = {f.text: t for f, t in found}
    assert texts["exists y1. R(x1,y1)"] == (0, 1)
    assert texts["exists y1. R(y1,x1)"] == (1, 2)
    assert find_indicators(empty_structure(3), 2) == []


def test_z4_has_no_indicators(z4):
    assert find_indicators(z4, 2) == []


@pytest.mark.slow
def test_z4_has_no_indicators_depth3(z4):
    assert find_indicators(z4, 3) == []


def test_partitions(l3, z4):
    assert indiscernibility_partition(l3) == [(0,), (1,), (2,)]
    assert indiscernibility_partition(z4) == [(0, 1, 2, 3)]
    assert indiscernibility_partition(empty_structure(3)) == [(0, 1, 2)]
    assert indicator_partition(l3, 1) == [(0,), (1,), (2,)]
    assert indicator_partition(z4, 1) == [(0, 1, 2, 3)]


def test_q(chain3, l3):
    assert check_Q(chain3, "R", "subsets").holds
    full = single_relation(2, "R", [(0, 0), (0, 1), (1, 0), (1, 1)])
    v = check_Q(full, "R", "subsets")
    assert not v.holds
    assert v.witness_subset == (0, 1) and v.minimizers == (0, 1)
    assert v.violation == "multiple-minimizers"
    v = check_Q(l3, "R", "subsets")
    assert v.witness_subset == (0,) and v.minimizers == ()
    assert v.violation == "no-minimizer"
    assert recheck(l3, v)


def test_q_one_element():
    assert check_Q(single_relation(1, "R", [(0, 0)]), "R").holds
    assert not check_Q(single_relation(1, "R", []), "R").holds


def test_q_formula_mode(chain3, l3):
    assert check_Q(chain3, "R", "formulas:1").holds
    v = check_Q(l3, "R", "formulas:1")
    assert not v.holds
    assert v.witness_formula is not None
    assert recheck(l3, v)


def test_f(chain3, l3):
    assert check_F(chain3, "R").holds
    v = check_F(l3, "R")
    assert not v.holds and v.witness_subset == (0,)
    assert recheck(l3, v)


def test_q1():
    pre = total_preorder([[0, 1], [2]])
    v = check_Q1(pre, "D", "orbits")
    assert v.holds
    assert v.z_sets["M"] == (0, 1)

    v = check_Q1(pre, "D", "subsets")
    assert not v.holds and v.violation == "split-z"
    assert recheck(pre, v)

    v = check_Q1(linear_chain(3), "R", "subsets")
    assert not v.holds and v.violation == "empty-z"
    assert recheck(linear_chain(3), v)

    full = single_relation(3, "R", [(x, y) for x in range(3) for y in range(3)])
    assert check_Q1(full, "R", "orbits").holds
    assert not check_Q1(full, "R", "subsets").holds


def test_admissible_sets(l3, z4):
    assert len(list(admissible_sets(l3, Mode(Mode.SUBSETS)))) == 7
    assert [m for m, _ in admissible_sets(z4, ORBITS)] == [0b1111]


def test_verdict_round_trip(l3):
    v = check_uniformity(l3, 1, "formulas:1")
    data = v.to_dict()
    again = SchemeVerdict.from_dict(data)
    assert again.to_dict() == data
    assert recheck(l3, again)
    assert [w["name"] for w in v.witnesses()] == ["witness_formula",
        "witness_tuple", "falsifying_tuple"]


def test_recheck_rejects_forged(l3, chain3):
    v = check_Q(l3, "R", "subsets")
    forged = SchemeVerdict.from_dict(dict(v.to_dict(), minimizers=[1]))
    assert not recheck(l3, forged)

    v = check_uniformity(l3, 1, ORBITS)
    assert not recheck(single_relation(3, "R", []), v)

    with pytest.raises(BadWitness):
        recheck(l3, SchemeVerdict("q", False, "subsets", relation="R"))
    assert recheck(chain3, check_Q(chain3, "R"))


def test_recheck_needs_admissible_sets(l3):
    data = check_Q(l3, "R", "subsets").to_dict()
    assert data["witness_subset"] == [0]

    def forged(**changes):
        return SchemeVerdict.from_dict(dict(data, **changes))

    # {0} needs a negated quantifier
    assert not recheck(l3, forged(mode="formulas:1"))
    assert recheck(l3, forged(mode="formulas:2"))
    assert recheck(l3, forged(mode="orbits"))
    assert not recheck(l3, forged(witness_subset=[5], minimizers=[]))
    assert not recheck(l3, forged(witness_subset=[], minimizers=[]))

    pre = total_preorder([[0, 1], [2]])
    data = check_Q1(pre, "D", "subsets").to_dict()
    assert data["splitter"] is not None
    assert recheck(pre, forged())
    assert not recheck(pre, forged(mode="orbits"))


def test_instance_violation(c3):
    from umt.formula import Evaluator, distinct_mask
    f = parse_formula("R(x1,x2)")
    names = free_names(2)
    assert instance_violation(Evaluator(c3), f, names, distinct_mask(3, 2)) \
        is None
