"""Decomposition recursion, fast path, enumeration, principality record."""

from __future__ import annotations

import pytest

from arfkit import (
    DecompositionResult,
    NATURALS,
    NotArf,
    NotInSemigroup,
    NumericalSemigroup,
    UnitIdeal,
    decompose,
    decompose_fast,
    enumerate_arf_semigroups,
    enumerate_non_normal_ideals,
    maximal_ideal,
    partial_products_check,
    principal_closure,
    principality_triple,
)
from arfkit.decomp import product_of_value_sets
from arfkit.intset import CofiniteSet

S31113 = NumericalSemigroup.from_generators([3, 11, 13])
S3810 = NumericalSemigroup.from_generators([3, 8, 10])
S357 = NumericalSemigroup.from_generators([3, 5, 7])
S23 = NumericalSemigroup.from_generators([2, 3])
S467 = NumericalSemigroup.from_generators([4, 6, 7])


def test_worked_example():
    result = decompose(S31113, 6)
    assert result.q == 1
    assert result.verified
    assert result.factors == (maximal_ideal(S31113), maximal_ideal(S3810))
    assert result.endpoint_ring == S357
    # the level-1 ideal is the maximal ideal of the first blow-up
    assert result.steps[1].ideal == maximal_ideal(S3810)
    assert result.steps[1].shift == 3
    # the product re-multiplies to {6, 9, 11, 12, ...}
    assert principal_closure(S31113, 6).value_set == CofiniteSet.from_members([6, 9], 11)


def test_valuation_ring_powers():
    for k in range(6):
        result = decompose(NATURALS, k)
        assert result.q == k - 1
        assert len(result.factors) == k
        assert all(f.value_set == CofiniteSet.tail(1) for f in result.factors)
        assert result.verified


def test_two_three_at_four():
    result = decompose(S23, 4)
    assert result.q == 2
    assert [f.ambient for f in result.factors] == [S23, NATURALS, NATURALS]
    product = product_of_value_sets([f.value_set for f in result.factors], S23.value_set)
    assert product == CofiniteSet.tail(4)
    assert result.verified


def test_fast_path_examples():
    result = decompose_fast(S31113, 9)
    assert result.q == 2
    assert [f.ambient for f in result.factors] == [S31113, S3810, S357]

    result = decompose_fast(S31113, 11)
    assert result.q == 3
    assert [f.ambient for f in result.factors] == [S31113, S3810, S357, S23]
    assert principal_closure(S31113, 11).value_set == CofiniteSet.tail(11)

    result = decompose_fast(S31113, 0)
    assert result.q == -1
    assert result.factors == ()
    assert result.endpoint_ring == S31113
    assert result.verified


def test_unit_ideal_decomposition():
    result = decompose(S31113, 0)
    assert result.q == -1
    assert result.factors == ()
    assert result.verified
    assert result.endpoint_ring == S31113
    assert partial_products_check(result, principal_closure(S31113, 0))


def test_errors():
    with pytest.raises(NotArf):
        decompose(S467, 4)
    with pytest.raises(NotArf):
        decompose_fast(S467, 4)
    with pytest.raises(NotArf):
        enumerate_non_normal_ideals(S467)
    with pytest.raises(NotInSemigroup):
        decompose(S31113, 5)
    with pytest.raises(NotInSemigroup):
        decompose_fast(S31113, -3)


def test_partial_products():
    ideal = principal_closure(S31113, 6)
    result = decompose(S31113, 6)
    assert partial_products_check(result, ideal)
    # level 0: radical * level-1 ideal re-multiplies to the input
    level0 = result.steps[0].radical.value_set.sumset(result.steps[1].ideal.value_set)
    assert level0 == ideal.value_set

    result = decompose(S23, 4)
    assert partial_products_check(result, principal_closure(S23, 4))


def test_enumerate_non_normal_ideals():
    ideals = enumerate_non_normal_ideals(S31113)
    assert [i.min_value for i in ideals] == [0, 3, 6, 9]
    assert enumerate_non_normal_ideals(NATURALS) == []
    assert [i.min_value for i in enumerate_non_normal_ideals(S23)] == [0]


def test_principality_triple():
    t = principality_triple(NATURALS, 5)
    assert (t.ideal_principal, t.radical_principal, t.ring_is_dvr) == (True, True, True)

    t = principality_triple(S31113, 6)
    assert (t.ideal_principal, t.radical_principal, t.ring_is_dvr) == (False, False, False)
    ideal = principal_closure(S31113, 6)
    shifted = S31113.value_set.shift(6)
    assert 17 in shifted and 17 in ideal  # 6 + 11
    assert 14 in ideal and 14 not in shifted  # 8 is a gap of S

    t = principality_triple(S23, 2)
    assert (t.ideal_principal, t.radical_principal, t.ring_is_dvr) == (False, False, False)

    with pytest.raises(UnitIdeal):
        principality_triple(S31113, 0)
    with pytest.raises(NotInSemigroup):
        principality_triple(S31113, 7)


def test_paths_agree_small_family():
    for sg in enumerate_arf_semigroups(20):
        for a in sg.value_set.members_upto(sg.conductor + 2 * sg.multiplicity):
            lit = decompose(sg, a)
            fast = decompose_fast(sg, a)
            assert lit == fast, (sg, a)
            assert lit.verified
            # proper levels form an initial segment 0..q
            for step in lit.steps:
                assert (step.ideal.min_value > 0) == (step.index <= lit.q)


def test_json_round_trip():
    for sg, a in ((S31113, 6), (S23, 4), (NATURALS, 3), (S31113, 0)):
        result = decompose(sg, a)
        data = result.to_json_dict()
        rebuilt = DecompositionResult.from_json_dict(data)
        assert rebuilt == result
        assert rebuilt.to_json_dict() == data
