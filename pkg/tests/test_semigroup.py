"""Numerical semigroup construction, invariants, stats, enumeration."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from arfkit import (
    EmptyGenerators,
    InputError,
    NATURALS,
    NonCoprime,
    NumericalSemigroup,
    enumerate_semigroups,
)


def brute_members(gens, bound):
    # independent dynamic-programming membership scan
    ok = [False] * (bound + 1)
    ok[0] = True
    for n in range(1, bound + 1):
        ok[n] = any(n >= g and ok[n - g] for g in gens)
    return ok


def test_from_generators_naturals():
    sg = NumericalSemigroup.from_generators([1])
    assert sg == NATURALS
    assert sg.conductor == 0
    assert sg.small_elements == (0,)


def test_from_generators_dp_oracle():
    # frozen from the DP scan: members of <3,11,13> below the conductor
    gens = [3, 11, 13]
    bound = 3 * 13 + 13
    ok = brute_members(gens, bound)
    conductor = max(i + 1 for i in range(bound + 1) if not ok[i])
    assert conductor == 11
    assert [i for i in range(conductor) if ok[i]] == [0, 3, 6, 9]

    sg = NumericalSemigroup.from_generators(gens)
    assert sg.small_elements == (0, 3, 6, 9)
    assert sg.conductor == 11
    assert sg.minimal_generators == (3, 11, 13)


def test_from_generators_rejects_bad_input():
    with pytest.raises(NonCoprime):
        NumericalSemigroup.from_generators([4, 6])
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup.from_generators([])
    with pytest.raises(InputError):
        NumericalSemigroup.from_generators([0, 3])
    with pytest.raises(InputError):
        NumericalSemigroup.from_generators([-2, 3])


def test_membership():
    sg = NumericalSemigroup.from_generators([3, 11, 13])
    assert not sg.contains(10)  # the largest gap
    assert sg.contains(14)  # 11 + 3
    assert sg.contains(0)
    assert not sg.contains(-3)
    assert 22 in sg


def test_stats_examples():
    s = NumericalSemigroup.from_generators([3, 11, 13]).stats()
    assert (s.multiplicity, s.conductor, s.frobenius, s.genus, s.embedding_dimension) == (
        3,
        11,
        10,
        7,
        3,
    )
    n = NATURALS.stats()
    assert (n.multiplicity, n.conductor, n.frobenius, n.genus, n.embedding_dimension) == (
        1,
        0,
        -1,
        0,
        1,
    )
    assert NATURALS.minimal_generators == (1,)
    t = NumericalSemigroup.from_generators([2, 3]).stats()
    assert (t.multiplicity, t.conductor, t.genus, t.embedding_dimension) == (2, 2, 1, 2)


def test_equality():
    assert NumericalSemigroup.from_generators([2, 3]) == NumericalSemigroup.from_generators(
        [2, 3, 5]
    )
    assert NumericalSemigroup.from_generators([3, 11, 13]) != NumericalSemigroup.from_generators(
        [3, 8, 10]
    )
    sg = NumericalSemigroup.from_generators([5, 7, 9])
    assert sg == sg


def test_canonical_idempotence(family15):
    for sg in family15:
        assert NumericalSemigroup.from_value_set(sg.value_set) == sg


def test_generator_round_trip(family15):
    for sg in family15:
        assert NumericalSemigroup.from_generators(sg.minimal_generators) == sg


def test_multiplicity_is_least_generator(family15):
    for sg in family15:
        gens = sg.minimal_generators
        assert sg.multiplicity in gens
        assert sg.multiplicity == min(gens)


def test_addition_closure_window(family15):
    # exhaustive closure check below conductor + largest generator
    for sg in family15:
        top = sg.conductor + max(sg.minimal_generators)
        members = sg.value_set.members_upto(top)
        for x in members:
            for y in members:
                if x + y <= top:
                    assert (x + y) in sg


@settings(max_examples=150, derandomize=True)
@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=5))
def test_random_round_trip(gens):
    if math.gcd(*gens) != 1:
        with pytest.raises(NonCoprime):
            NumericalSemigroup.from_generators(gens)
        return
    sg = NumericalSemigroup.from_generators(gens)
    assert NumericalSemigroup.from_generators(sg.minimal_generators) == sg
    # conductor is minimal
    assert sg.conductor == 0 or not sg.contains(sg.conductor - 1)
    for g in gens:
        assert g in sg


def brute_enumerate(max_conductor):
    # every numerical semigroup with conductor <= C, by scanning all
    # member patterns below C; independent of the tree walk
    found = set()
    for c in range(max_conductor + 1):
        for mask in range(1 << max(c - 1, 0)):
            members = {0} | {i for i in range(1, c) if (mask >> (i - 1)) & 1}
            if c > 0 and (c - 1) in members:
                continue  # conductor not minimal
            if c == 1:
                continue  # conductor 1 impossible: c - 1 = 0 is a member
            closed = all(
                (x + y) in members or x + y >= c for x in members for y in members
            )
            if closed:
                found.add((tuple(sorted(members)), c))
    return found


def test_enumeration_matches_brute_force():
    got = {(sg.small_elements, sg.conductor) for sg in enumerate_semigroups(9)}
    want = brute_enumerate(9)
    want = {((0,) if els == (0,) else els, c) for els, c in want}
    assert got == want


def test_enumeration_count_families(family15):
    assert len(family15) == len({(s.small_elements, s.conductor) for s in family15})
    assert NATURALS in family15
    assert all(s.conductor <= 15 for s in family15)


def test_json_round_trip(family15):
    for sg in family15[:50]:
        data = sg.to_json_dict()
        assert NumericalSemigroup.from_json_dict(data) == sg
    with pytest.raises(InputError):
        NumericalSemigroup.from_json_dict({"generators": [2, 3], "small_elements": [0], "conductor": 5})


def test_display():
    assert str(NumericalSemigroup.from_generators([3, 11, 13])) == "⟨3,11,13⟩"
    assert str(NATURALS) == "⟨1⟩"
