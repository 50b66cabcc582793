"""
Formula parsing, semantics and definition files.
"""

import numpy as np
import pytest

from umt.errors import *
from umt.families import empty_structure, linear_chain
from umt.formula import *
from umt.formula import (alpha_equivalent, canonical, free_order,
    parse_definitions, substitute)


def test_precedence():
    f = parse_formula("!A(x) & B(x) -> C(x)")
    assert f == Implies(And((Not(Atom("A", ("x",))), Atom("B", ("x",)))),
        Atom("C", ("x",)))
    assert f.text == "(!A(x) & B(x)) -> C(x)"


def test_implication_is_right_associative():
    f = parse_formula("A(x) -> B(x) -> C(x)")
    assert isinstance(f.right, Implies)


def test_sentence():
    f = parse_formula("forall x. exists y. R(x,y)")
    assert f.free == frozenset()
    assert isinstance(f, Forall) and isinstance(f.body, Exists)


def test_ambiguous_mix():
    with pytest.raises(AmbiguousMix):
        parse_formula("A(x) & B(x) | C(x)")
    assert isinstance(parse_formula("(A(x) & B(x)) | C(x)"), Or)


def test_syntax_errors():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("R(x,")
    assert e.value.position is not None
    with pytest.raises(FormulaSyntaxError):
        parse_formula("exists . R(x)")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("R(x) R(y)")


def test_signature_check():
    sig = {"R": 2}
    parse_formula("R(x,y)", sig)
    with pytest.raises(ArityMismatch):
        parse_formula("R(x)", sig)
    with pytest.raises(UnknownRelation):
        parse_formula("S(x,y)", sig)


def test_text_round_trip():
    for text in ("exists y. R(x,y) & x != y", "forall z. R(z,z) <-> (x=z)",
            "existsu y. (R(x,y) | R(y,x))", "!(exists y. R(y,x))"):
        f = parse_formula(text)
        assert parse_formula(f.text) == f


def test_shadowed_variable_renamed():
    f = parse_formula("exists x. R(x,x) & exists x. R(x,y)")
    inner = f.body.items[1]
    assert inner.var != "x"
    assert f.free == frozenset({"y"})


def test_alpha_equivalence():
    f = parse_formula("exists y. R(x,y)")
    g = parse_formula("exists z. R(x,z)")
    assert f != g
    assert alpha_equivalent(f, g)
    assert canonical(f) == canonical(g)
    assert not alpha_equivalent(f, parse_formula("exists y. R(y,x)"))


def test_substitute_avoids_capture():
    f = parse_formula("exists y. R(x,y)")
    g = substitute(f, {"x": "y"})
    assert g.free == frozenset({"y"})
    assert g.var != "y"


def test_free_order():
    assert free_order(parse_formula("R(y,x) & x=z")) == ("y", "x", "z")


def test_evaluate(l3):
    succ = parse_formula("exists y. R(x,y)")
    assert not evaluate(l3, succ, {"x": 2})
    assert evaluate(l3, succ, {"x": 0})
    assert evaluate(l3, parse_formula("x=x"), {"x": 0})
    trans = parse_formula("forall x. forall y. forall z. "
        "R(x,y) & R(y,z) -> R(x,z)")
    assert evaluate(l3, trans, {})


def test_exists_unique(l3):
    f = parse_formula("existsu y. R(x,y)")
    assert evaluate(l3, f, {"x": 1})
    assert not evaluate(l3, f, {"x": 0})
    assert not evaluate(l3, f, {"x": 2})


def test_evaluate_errors(l3):
    with pytest.raises(UnboundVariable):
        evaluate(l3, parse_formula("R(x,y)"), {"x": 0})
    with pytest.raises(ArityMismatch):
        evaluate(l3, parse_formula("R(x)"), {"x": 0})
    with pytest.raises(UnknownRelation):
        evaluate(l3, parse_formula("S(x,x)"), {"x": 0})
    f = parse_formula("exists y. R(x,y)")
    for bad in (-1, 3, 5, "0", 1.0, True):
        with pytest.raises(OutOfRange):
            evaluate(l3, f, {"x": bad})
    with pytest.raises(OutOfRange):
        evaluate(l3, parse_formula("R(x,y)"), {"x": 5, "y": 0})
    assert evaluate(l3, f, {"x": np.int64(1)})


def test_truth_set(l3):
    assert truth_set(l3, parse_formula("exists y. R(x,y)"), ["x"]) \
        == {(0,), (1,)}
    assert truth_set(empty_structure(3), parse_formula("x=x"), ["x"]) \
        == {(0,), (1,), (2,)}
    assert truth_set(l3, parse_formula("R(x,y)"), ["x", "y"]) \
        == {(0, 1), (0, 2), (1, 2)}
    assert truth_set(l3, parse_formula("R(x,y)"), ["y", "x"]) \
        == {(1, 0), (2, 0), (2, 1)}
    assert truth_set(l3, parse_formula("exists x. R(x,x)"), []) == set()
    with pytest.raises(ArityMismatch):
        truth_set(l3, parse_formula("R(x,y)"), ["x", "x", "y"])


def test_evaluator_matches_evaluate():
    s = linear_chain(4, strict=False)
    f = parse_formula("forall z. R(z,x) -> (R(z,y) | existsu w. R(w,z))")
    table = Evaluator(s).ordered(f, ["x", "y"])
    for x in range(4):
        for y in range(4):
            assert table[x, y] == evaluate(s, f, {"x": x, "y": y})


def test_factorial_closure():
    f = parse_formula("R(x,y)")
    g = factorial_closure(f, ["x", "y"])
    assert g == Or((f, parse_formula("R(y,x)")))
    h = factorial_closure(parse_formula("T(x,y,z)"), ["x", "y", "z"])
    assert isinstance(h, Or) and len(h.items) == 6
    sym = factorial_closure(parse_formula("x=y"), ["x", "y"])
    assert len(sym.items) == 2
    with pytest.raises(ArityMismatch):
        factorial_closure(f, ["x"])


def test_symmetrize(l3):
    arr = symmetrize(l3.binary("R"))
    assert arr[1, 0] and arr[0, 1]
    assert not arr.diagonal().any()


def test_distinct_mask():
    m = distinct_mask(3, 2)
    assert m.sum() == 6 and not m.diagonal().any()
    assert distinct_mask(3, 3).sum() == 6


def test_definitions(samples):
    defs = load_definitions(samples / "wellorder.fml", {"rho": 2})
    assert list(defs) == ["P", "pl", "Pl", "Plu", "no"]
    assert defs["P"].params == ("x", "y")
    # expanded bodies mention the structure relation only
    assert "P(" not in defs["pl"].formula.text
    assert "pl(" not in defs["Pl"].formula.text


def test_definitions_on_chain(samples):
    s = linear_chain(5, strict=False, name="rho")
    defs = load_definitions(samples / "wellorder.fml")
    pl = truth_set(s, defs["pl"].formula, ["x", "y"])
    assert pl == {(x, y) for x in range(5) for y in range(5) if y - x >= 2}
    assert truth_set(s, defs["Pl"].formula, ["x", "y"]) == set()
    assert truth_set(s, defs["no"].formula, ["x"]) == set()


def test_expand():
    defs = parse_definitions("S(a,b) := R(a,b) & a != b")
    f = expand(parse_formula("exists y. S(x,y)"), defs)
    assert alpha_equivalent(f, parse_formula("exists y. R(x,y) & x != y"))


def test_definition_errors():
    with pytest.raises(FormulaSyntaxError):
        parse_definitions("S(a,b) R(a,b)")
    with pytest.raises(DuplicateRelation):
        parse_definitions("S(a) := a=a\nS(a) := a=a")
    with pytest.raises(UnboundVariable):
        parse_definitions("S(a) := R(a,b)")
    with pytest.raises(ArityMismatch):
        parse_definitions("S(a) := a=a\nT(a) := S(a,a)")
    with pytest.raises(UnknownRelation):
        parse_definitions("S(a) := Q(a,a)", {"R": 2})
