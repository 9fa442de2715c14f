from __future__ import annotations

import pytest

from wilfkit.errors import (
    DegenerateSemigroup,
    EmptyInput,
    IntegerOverflow,
    InvalidInput,
    NonCoprime,
    ZeroGenerator,
)
from wilfkit.services import enumeration_service, semigroup_service

from .oracles import pseudo_frobenius_raw, sieve


class TestConstruct:
    def test_seven_eight_ten_nineteen(self, s_7_8_10_19):
        assert s_7_8_10_19.apery == (0, 8, 10, 16, 18, 19, 20)
        assert s_7_8_10_19.embedding_dimension == 4
        assert s_7_8_10_19.multiplicity == 7

    def test_naturals(self, naturals):
        assert naturals.apery == (0,)
        assert naturals.frobenius == -1
        assert naturals.conductor == 0
        assert naturals.embedding_dimension == 1
        assert naturals.is_natural

    def test_two_three(self, two_three):
        assert two_three.apery == (0, 3)
        assert two_three.frobenius == 1
        assert two_three.embedding_dimension == 2

    def test_redundant_and_duplicate_generators(self):
        assert semigroup_service.construct([13, 4, 10, 6, 9, 4]).generators == (4, 6, 9)

    def test_equality_uses_generators(self):
        assert semigroup_service.construct([10, 4, 6, 9]) == semigroup_service.construct([4, 6, 9])

    @pytest.mark.parametrize(
        "generators, error",
        [
            ([], EmptyInput),
            ([4, 6], NonCoprime),
            ([0, 3], ZeroGenerator),
            ([-2, 3], ZeroGenerator),
            ([2, (1 << 60) + 1], IntegerOverflow),
        ],
    )
    def test_invalid_input(self, generators, error):
        with pytest.raises(error) as raised:
            semigroup_service.construct(generators)
        assert isinstance(raised.value, InvalidInput)
        assert isinstance(raised.value, ValueError)


class TestInvariants:
    def test_membership(self, s_7_8_10_19):
        assert semigroup_service.contains(s_7_8_10_19, 16)
        assert not semigroup_service.contains(s_7_8_10_19, 9)
        assert not semigroup_service.contains(s_7_8_10_19, -1)

    @pytest.mark.parametrize(
        "generators, frobenius, n, genus",
        [([7, 8, 10, 19], 13, 4, 10), ([1], -1, 0, 0), ([2, 3], 1, 1, 1)],
    )
    def test_counts(self, generators, frobenius, n, genus):
        semigroup = semigroup_service.construct(generators)

        assert semigroup_service.frobenius(semigroup) == frobenius
        assert semigroup_service.n_of(semigroup) == n
        assert semigroup_service.genus(semigroup) == genus

    def test_gaps(self, s_7_8_10_19):
        assert semigroup_service.gaps(s_7_8_10_19) == [1, 2, 3, 4, 5, 6, 9, 11, 12, 13]

    def test_apery_poset_of_s_7_8_10_19(self, s_7_8_10_19):
        poset = semigroup_service.apery_poset(s_7_8_10_19)

        assert poset.max_elements == (16, 18, 19, 20)
        assert poset.min_elements == (8, 10, 19)
        assert poset.type == 4
        assert (8, 16) in poset.covers
        assert (10, 18) in poset.covers

    def test_apery_poset_of_two_three(self, two_three):
        poset = semigroup_service.apery_poset(two_three)

        assert poset.elements == (3,)
        assert poset.min_elements == poset.max_elements == (3,)
        assert poset.type == 1

    @pytest.mark.parametrize(
        "generators, expected",
        [([7, 8, 10, 19], [9, 11, 12, 13]), ([2, 3], [1]), ([5, 6, 7, 8, 9], [1, 2, 3, 4])],
    )
    def test_pseudo_frobenius(self, generators, expected):
        assert semigroup_service.pseudo_frobenius(semigroup_service.construct(generators)) == expected

    def test_pseudo_frobenius_of_naturals(self, naturals):
        with pytest.raises(DegenerateSemigroup):
            semigroup_service.pseudo_frobenius(naturals)

    def test_maximal_embedding_dimension_apery(self):
        semigroup = semigroup_service.construct([5, 6, 7, 8, 9])

        assert semigroup_service.maximal_apery(semigroup) == (6, 7, 8, 9)
        assert semigroup_service.type_of(semigroup) == 4

    def test_type_of_naturals(self, naturals):
        assert semigroup_service.type_of(naturals) == 0


class TestRemoveGenerator:
    def test_child_of_seven_eight_ten_nineteen(self, s_7_8_10_19):
        child = semigroup_service.remove_generator(s_7_8_10_19, 19)

        assert 19 not in child
        assert child == semigroup_service.construct(child.generators)
        assert semigroup_service.genus(child) == 11

    def test_child_of_ordinary_semigroup(self):
        parent = semigroup_service.construct(range(4, 8))

        assert semigroup_service.remove_generator(parent, 4).generators == (5, 6, 7, 8, 9)

    def test_child_of_naturals(self, naturals):
        assert semigroup_service.remove_generator(naturals, 1).generators == (2, 3)

    @pytest.mark.parametrize("generator", [8, 11, 7])
    def test_rejects_non_effective_generators(self, s_7_8_10_19, generator):
        with pytest.raises(InvalidInput):
            semigroup_service.remove_generator(s_7_8_10_19, generator)

    def test_incremental_children_match_construction(self):
        for node in _nodes(7):
            for generator in node.effective_generators:
                child = semigroup_service.remove_generator(node.semigroup, generator)
                rebuilt = semigroup_service.construct(child.generators)
                assert child.generators == rebuilt.generators
                assert child.apery_by_residue == rebuilt.apery_by_residue


def _nodes(max_genus):
    stack = [enumeration_service.root()]
    while stack:
        node = stack.pop()
        yield node
        if node.depth < max_genus:
            stack.extend(enumeration_service.children(node))


def test_structural_properties_over_the_tree():
    for semigroup in enumeration_service.iter_semigroups(9):
        m = semigroup.multiplicity
        apery = semigroup.apery
        assert sorted(w % m for w in apery) == list(range(m))
        assert apery[0] == 0
        assert apery[-1] - m == semigroup.frobenius
        assert semigroup.embedding_dimension <= m
        if semigroup.is_natural:
            continue
        assert apery[1] == semigroup.generators[1]
        assert semigroup_service.type_of(semigroup) <= m - 1

        members = sieve(semigroup.generators, semigroup.frobenius + 2 * m)
        for x in range(-m, semigroup.frobenius + 2 * m + 1):
            assert (x in semigroup) == (x >= 0 and members[x])
        assert semigroup.small_members.tolist() == members[: semigroup.frobenius + m + 1]


def test_maximal_apery_matches_poset_and_definition():
    for semigroup in enumeration_service.iter_semigroups(10):
        if semigroup.is_natural:
            continue
        poset = semigroup_service.apery_poset(semigroup)
        assert poset.min_elements == semigroup_service.minimal_apery(semigroup) == semigroup.generators[1:]
        assert semigroup_service.maximal_apery(semigroup) == poset.max_elements
        assert semigroup_service.pseudo_frobenius(semigroup) == pseudo_frobenius_raw(semigroup.generators)
