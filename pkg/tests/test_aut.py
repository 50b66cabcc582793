"""
Automorphism groups, orbits and isomorphism codes.
"""

import random

import pytest

from umt.aut import *
from umt.aut import compose, inverse
from umt.errors import *
from umt.formula import free_names, random_formula, truth_set
from umt.families import (cyclic_order, empty_structure, linear_chain,
    single_relation)
from umt.structure import permute_structure


def test_rigid_chain(l3):
    group = automorphism_group(l3)
    assert group.order == 1
    assert group.is_rigid()
    assert list(group) == [(0, 1, 2)]


def test_rotations(z4):
    group = automorphism_group(z4)
    assert list(group) == [(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1),
        (3, 0, 1, 2)]
    assert group.verify()


def test_symmetric_group():
    group = automorphism_group(empty_structure(3))
    assert group.order == 6
    assert group.verify()
    assert (2, 0, 1) in group


def test_group_operations():
    g, h = (1, 2, 0), (0, 2, 1)
    assert compose(g, inverse(g)) == (0, 1, 2)
    assert compose(inverse(g), g) == (0, 1, 2)
    assert compose(g, h) != compose(h, g)


def test_limit(settings, z4):
    settings.limits.aut_universe = 3
    with pytest.raises(AutLimitExceeded):
        automorphism_group(z4)


def test_orbits_z4(z4):
    part = orbits(z4, 2, SUBSETS)
    assert part.classes == [((0, 1), (0, 3), (1, 2), (2, 3)),
        ((0, 2), (1, 3))]
    assert part.group_order == 4
    assert part.lagrange()
    assert part.class_of((1, 3)) == 1


def test_orbits_basic(l3, c3):
    assert len(orbits(l3, 1, SUBSETS)) == 3
    full = orbits(l3, 3, SUBSETS)
    assert full.classes == [((0, 1, 2),)]
    tuples = orbits(c3, 2, TUPLES)
    assert tuples.classes == [((0, 1), (1, 2), (2, 0)), ((0, 2), (1, 0), (2, 1))]
    assert tuples.to_dict()["classes"][0] == [[0, 1], [1, 2], [2, 0]]
    with pytest.raises(BadMode):
        orbits(l3, 1, "pairs")
    with pytest.raises(BadLevel):
        orbits(l3, -1)


def test_homogeneity(c3, z4, l3):
    assert is_n_homogeneous(c3, 2)
    assert not is_n_homogeneous(z4, 2)
    assert is_n_homogeneous(z4, 3)
    assert is_n_homogeneous(l3, 4)
    with pytest.raises(BadLevel):
        is_n_homogeneous(l3, 0)


def test_point_orbits(l3, z4):
    assert point_orbits(l3) == [(0,), (1,), (2,)]
    assert point_orbits(z4) == [(0, 1, 2, 3)]
    assert point_orbits(empty_structure(3)) == [(0, 1, 2)]


def test_codes(l3):
    assert structure_code(l3) == 0b100110
    flipped = permute_structure(l3, [2, 0, 1])
    assert structure_code(flipped) != structure_code(l3)
    assert canonical_code(flipped) == canonical_code(l3)
    assert canonical_code(l3) == min(structure_code(permute_structure(l3, p))
        for p in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1),
            (2, 1, 0)])


def test_codes_past_64_bits():
    chain = linear_chain(9)
    assert structure_code(chain) == sum(1 << (9*i + j) for i in range(9)
        for j in range(i+1, 9))
    z5 = cyclic_order(5)
    assert structure_code(z5).bit_length() > 64
    moved = permute_structure(z5, [3, 0, 4, 1, 2])
    assert structure_code(moved) != structure_code(z5)
    assert canonical_code(moved) == canonical_code(z5)


def test_isomorphic_copies(l3, z4):
    assert count_isomorphic_copies(l3) == 6
    assert count_isomorphic_copies(z4) == 6
    assert count_isomorphic_copies(empty_structure(3)) == 1


def test_subset_types():
    loop = single_relation(3, "R", [(0, 0)])
    assert not subset_types_uniform(loop, 1)
    assert subset_types_uniform(loop, 3)
    assert subset_types_uniform(linear_chain(3), 2)


@pytest.mark.parametrize("free", [1, 2, 3])
def test_truth_sets_are_invariant(free, c3, z4, l3):
    swap = single_relation(3, "R", [(0, 1), (1, 0), (2, 2)])
    rng = random.Random(11)
    names = free_names(free)
    for s in (c3, z4, l3, swap):
        group = automorphism_group(s)
        for _ in range(20):
            f = random_formula(rng, s.signature, names, 3)
            found = truth_set(s, f, names)
            for g in group:
                assert {tuple(g[e] for e in t) for t in found} == found, f.text
