"""Brute-force oracle layer: worked examples and window bookkeeping."""

from __future__ import annotations

import pytest

from arfkit import BoundMismatch, NumericalSemigroup, maximal_ideal, principal_closure
from arfkit.oracle import BoundedSet, oracle_colon, oracle_pattern_saturate, oracle_sumset

S31113 = NumericalSemigroup.from_generators([3, 11, 13])
S467 = NumericalSemigroup.from_generators([4, 6, 7])


def table_from(values, bound):
    return BoundedSet.from_values(bound, values)


def exact_table(ideal, bound):
    return BoundedSet.from_values(bound, ideal.value_set.members_upto(bound))


def test_sumset_worked_example():
    bound = 60
    m0 = exact_table(maximal_ideal(S31113), bound)
    m1 = table_from([3, 6, 8] + list(range(9, bound + 1)), bound)
    got = oracle_sumset(m0, m1)
    want = {6, 9} | set(range(11, got.valid_hi + 1))
    assert {v for v in got.members if v <= got.valid_hi} == want


def test_sumset_trivial_and_derived():
    bound = 30
    a = table_from([0, 2, 5] + list(range(7, bound + 1)), bound)
    zero = table_from([0] + list(range(20, bound + 1)), bound)
    got = oracle_sumset(a, zero)
    hi = got.valid_hi
    assert {v for v in got.members if v <= hi} >= {v for v in a.members if v <= hi} - set(
        range(hi + 1, bound + 1)
    )

    two = table_from(range(2, bound + 1), bound)
    got = oracle_sumset(two, two)
    assert {v for v in got.members if v <= got.valid_hi} == set(range(4, got.valid_hi + 1))


def test_colon_worked_example():
    bound = 200
    ideal = exact_table(principal_closure(S31113, 6), bound)
    m = exact_table(maximal_ideal(S31113), bound)
    got = oracle_colon(ideal, m)
    hi = got.valid_hi
    want = {3, 6, 8, 9, 10} | set(range(11, hi + 1))
    assert {v for v in got.members if 0 <= v <= hi} == want
    assert {v for v in got.members if v < 3} == set()


def test_colon_by_whole_semigroup_is_identity():
    bound = 80
    ideal = exact_table(principal_closure(S31113, 6), bound)
    ring = exact_table(principal_closure(S31113, 0), bound)
    got = oracle_colon(ideal, ring)
    hi = got.valid_hi
    assert {v for v in got.members if v <= hi} == {v for v in ideal.members if v <= hi}


def test_colon_non_stable_blowup():
    bound = 100
    m = exact_table(maximal_ideal(S467), bound)
    got = oracle_colon(m, m)
    hi = got.valid_hi
    # 9 + m lands entirely at or beyond the conductor, so 9 multiplies m
    # into itself even though 9 is not a member of the semigroup
    want = {0, 4, 6, 7, 8} | set(range(9, hi + 1))
    assert {v for v in got.members if v <= hi} == want
    # 2 is absent although 2 = 6 - 4 sits in the shifted copy m - 4: the
    # quotient of a non-stable ideal is strictly larger than the shift
    assert 2 not in got.members
    assert 2 in {v - 4 for v in m.members}
    # cross-check against the exact multiplier ring
    endo = maximal_ideal(S467).endo_ring()
    assert set(endo.value_set.members_upto(hi)) == want


def test_pattern_saturate():
    bound = 100
    s = exact_table(principal_closure(S467, 0), bound)
    got = oracle_pattern_saturate(s)
    assert 9 in got.members  # 6 + 7 - 4
    assert {v for v in got.members if v <= 12} == {0, 4, 6, 7, 8, 9, 10, 11, 12}

    arf = exact_table(principal_closure(S31113, 0), bound)
    assert oracle_pattern_saturate(arf).members == arf.members

    nat = table_from(range(0, bound + 1), bound)
    assert oracle_pattern_saturate(nat).members == nat.members


def test_bound_mismatch():
    a = table_from([0, 1], 10)
    b = table_from([0, 1], 12)
    with pytest.raises(BoundMismatch):
        oracle_sumset(a, b)
    with pytest.raises(BoundMismatch):
        oracle_colon(a, b)


def test_sumset_margin_shrinks_for_fractional_inputs():
    bound = 40
    a = table_from([-5] + list(range(0, bound + 1)), bound)
    b = table_from(range(3, bound + 1), bound)
    got = oracle_sumset(a, b)
    # decompositions of values near the window edge may use summands
    # beyond it, so the guarantee stops short of the bound
    assert got.valid_hi == bound + min(a.members)
    assert got.valid_hi < bound


def test_tail_start():
    t = table_from([0, 3, 6] + list(range(9, 41)), 40)
    assert t.tail_start() == 9
    gapless = table_from(range(-4, 41), 40)
    assert gapless.tail_start() == -4
