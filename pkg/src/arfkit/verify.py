"""Machine-checkable property battery behind the ``verify`` command.

Every structural fact the library relies on is rephrased here as an
exhaustive check over a semigroup (or family of semigroups), with the
scan bounds documented next to each property.  Reports carry per-property
case counts and serialized counterexamples; a failure is always a bug in
the library, never an expected outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import arf, decomp, oracle
from .ideal import ValueIdeal, maximal_ideal, principal_closure
from .intset import CofiniteSet
from .semigroup import NATURALS, NumericalSemigroup


@dataclass
class PropertyReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    recorded_failures: int = 0

    MAX_RECORDED = 5

    def check(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok:
            self.recorded_failures += 1
            if len(self.failures) < self.MAX_RECORDED:
                self.failures.append(detail)

    @property
    def passed(self) -> bool:
        return self.recorded_failures == 0

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.recorded_failures,
            "counterexamples": list(self.failures),
            "passed": self.passed,
        }


def _ideal_values(sg: NumericalSemigroup, bound: int) -> list[int]:
    # minimum values of integrally closed ideals scanned per semigroup
    return sg.value_set.members_upto(bound)


def check_checker_equivalence(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """The stability scan and the pattern scan agree, and witnesses refute."""
    ok_s, wit_s = arf.is_arf_stability(sg)
    ok_p, wit_p = arf.is_arf_pattern(sg)
    rep.check(ok_s == ok_p, f"{sg}: stability says {ok_s}, pattern says {ok_p}")
    if wit_s is not None:
        rep.check(wit_s.refutes(sg), f"{sg}: stability witness {wit_s} does not refute")
    if wit_p is not None:
        rep.check(wit_p.refutes(sg), f"{sg}: pattern witness {wit_p} does not refute")


def check_stable_ideal_criteria(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """For each integrally closed ideal E (min value up to conductor +
    multiplicity): E stable <=> blow-up ring equals multiplier ring
    <=> E : E equals E shifted to start at zero."""
    for a in _ideal_values(sg, sg.conductor + sg.multiplicity):
        ideal = principal_closure(sg, a)
        stable = ideal.is_stable()
        endo = ideal.endo_ring()
        blow = ideal.blowup_ring()
        shifted = ideal.value_set.shift(-a)
        colon_matches = ideal.colon(ideal).value_set == shifted
        rep.check(
            stable == (blow == endo) == colon_matches,
            f"{sg}, a={a}: stable={stable}, blowup==endo={blow == endo}, colon==shift={colon_matches}",
        )


def check_multiplier_duality(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """E : E equals (S : E) intersected with the naturals."""
    for a in _ideal_values(sg, sg.conductor + sg.multiplicity):
        ideal = principal_closure(sg, a)
        endo = ideal.endo_ring()
        dual_part = ideal.dual().value_set.restrict_from(0)
        rep.check(endo.value_set == dual_part, f"{sg}, a={a}: endo {endo} != dual∩N {dual_part!r}")


def check_endo_reversal(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """Smaller integrally closed ideals have larger multiplier rings, and
    the larger ring still multiplies the smaller ideal into itself."""
    values = _ideal_values(sg, sg.conductor + sg.multiplicity)
    for b in values:
        big = principal_closure(sg, b)
        endo_big = big.endo_ring()
        for a in values:
            if a < b:
                continue
            small = principal_closure(sg, a)
            endo_small = small.endo_ring()
            rep.check(
                endo_big.value_set.issubset(endo_small.value_set),
                f"{sg}: endo at {b} not inside endo at {a}",
            )
            rep.check(
                endo_big.value_set.issubset(small.colon(small).value_set),
                f"{sg}: ring of ideal at {b} does not multiply ideal at {a} into itself",
            )


def check_colon_of_pair(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """For integrally closed I inside J: I : J is an integrally closed
    ideal of B = J : J; when J is stable with minimum b, I : J is I
    shifted by -b and J * (I : J) re-multiplies to I."""
    values = _ideal_values(sg, sg.conductor + sg.multiplicity)
    for b in values:
        outer = principal_closure(sg, b)
        ring = outer.endo_ring()
        outer_stable = outer.is_stable()
        for a in values:
            if a < b:
                continue
            inner = principal_closure(sg, a)
            quotient = inner.colon(outer).value_set
            closed_in_ring = ring.value_set.restrict_from(quotient.min_element)
            rep.check(
                quotient == closed_in_ring,
                f"{sg}: ideal at {a} colon ideal at {b} not integrally closed over {ring}",
            )
            if outer_stable:
                rep.check(
                    quotient == inner.value_set.shift(-b),
                    f"{sg}: colon by stable ideal at {b} is not the shift of ideal at {a}",
                )
                rep.check(
                    outer.value_set.sumset(quotient) == inner.value_set,
                    f"{sg}: J*(I:J) != I for a={a}, b={b}",
                )


def check_shifted_bijection(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """For stable integrally closed I with minimum a and A = I : I, the
    shift by -a is a bijection between integrally closed ideals inside I
    and integrally closed ideals of A.  Scanned up to
    max(conductor, a + conductor(A)) + multiplicity, beyond which both
    sides are plain tails."""
    for a in _ideal_values(sg, sg.conductor + sg.multiplicity):
        ideal = principal_closure(sg, a)
        if not ideal.is_stable():
            continue
        ring = ideal.endo_ring()
        bound = max(sg.conductor, a + ring.conductor) + sg.multiplicity
        for b in sg.value_set.members_upto(bound):
            if b < a:
                continue
            shifted = principal_closure(sg, b).value_set.shift(-a)
            image = ring.value_set.restrict_from(b - a)
            rep.check(
                shifted == image,
                f"{sg}: ideal at {b} shifted by -{a} is not the closed ideal of {ring} at {b - a}",
            )
        for b in ring.value_set.members_upto(bound - a if bound >= a else 0):
            back = ring.value_set.restrict_from(b).shift(a)
            rep.check(
                back == sg.value_set.restrict_from(a + b),
                f"{sg}: closed ideal of {ring} at {b} shifted by {a} is not the ideal at {a + b}",
            )


def check_principality(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """The three principality statements agree (asserted inside the call)."""
    for a in _ideal_values(sg, sg.conductor + sg.multiplicity):
        if a == 0:
            continue
        triple = decomp.principality_triple(sg, a)
        rep.check(
            triple.ideal_principal == (sg.conductor == 0),
            f"{sg}, a={a}: unexpected principality {triple}",
        )


def check_decomposition(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """Decomposition facts for every a up to conductor + 2 * multiplicity:
    the factor product re-multiplies to the ideal, the literal and tower
    paths agree structurally, partial products hold at every level, the
    proper levels form an initial segment, every level ideal has constant
    multiplier ring, embeds in the next level, and is an ideal there, the
    tower rings match the blow-up chain, and the recursion length stays
    within genus + 2 (plus one level per unit of a above the conductor)."""
    ok, _ = arf.is_arf_stability(sg)
    if not ok:
        return
    chain, seq = arf.lipman_tower(sg)
    endpoint_cases = []
    for a in _ideal_values(sg, sg.conductor + 2 * sg.multiplicity):
        result = decomp.decompose(sg, a)
        fast = decomp.decompose_fast(sg, a)
        target = principal_closure(sg, a)
        rep.check(result.verified, f"{sg}, a={a}: factor product mismatch")
        rep.check(result == fast, f"{sg}, a={a}: literal and tower paths disagree")
        rep.check(
            decomp.partial_products_check(result, target),
            f"{sg}, a={a}: partial product identity fails",
        )
        rep.check(
            len(result.steps) <= sg.genus + 2 + max(0, a - sg.conductor),
            f"{sg}, a={a}: recursion took {len(result.steps)} steps",
        )
        bound_q = result.q
        rep.check(
            all(
                (step.ideal.min_value > 0) == (step.index <= bound_q)
                for step in result.steps
            ),
            f"{sg}, a={a}: proper levels are not an initial segment",
        )
        endo = result.endpoint_ring
        for step in result.steps:
            level_ring = step.ideal.colon(step.ideal).value_set
            rep.check(
                level_ring == endo.value_set,
                f"{sg}, a={a}, level {step.index}: multiplier ring differs from endpoint",
            )
            rep.check(
                step.ring.value_set.issubset(endo.value_set),
                f"{sg}, a={a}, level {step.index}: ring not inside endpoint",
            )
        for lo, hi in zip(result.steps, result.steps[1:]):
            rep.check(
                lo.ideal.value_set.issubset(hi.ideal.value_set),
                f"{sg}, a={a}, level {lo.index}: ideal not inside the next level ideal",
            )
            rep.check(
                hi.ring.value_set.issubset(lo.ideal.value_set.colon(lo.ideal.value_set)),
                f"{sg}, a={a}, level {lo.index}: not an ideal of the next ring",
            )
        for i, step in enumerate(result.steps):
            rep.check(
                step.ring == chain[min(i, len(seq.entries))],
                f"{sg}, a={a}, level {i}: ring differs from blow-up chain",
            )
        stabilized = None
        for lo, hi in zip(result.steps, result.steps[1:]):
            if lo.ring == hi.ring:
                stabilized = lo
                break
        if stabilized is not None:
            rep.check(
                stabilized.ideal.value_set
                == stabilized.ring.value_set.shift(stabilized.ideal.min_value),
                f"{sg}, a={a}: level {stabilized.index} repeats its ring but is not principal",
            )
            rep.check(
                all(
                    step.ring == endo
                    for step in result.steps[stabilized.index:]
                ),
                f"{sg}, a={a}: rings after stabilization differ from endpoint",
            )
        if sg.conductor == 0:
            rep.check(
                all(f.value_set == CofiniteSet.tail(1) for f in result.factors),
                f"{sg}, a={a}: valuation-ring factors are not all the maximal ideal",
            )
        endpoint_cases.append(result.endpoint_ring)
    del endpoint_cases


def check_tower_facts(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """For Arf inputs: every tower level is Arf with minimal multiplicity,
    the tower reaches the naturals within genus + 1 steps, and the tower
    and the multiplicity sequence invert each other."""
    ok, _ = arf.is_arf_stability(sg)
    if not ok:
        return
    chain, seq = arf.lipman_tower(sg)
    rep.check(len(seq.entries) <= sg.genus + 1, f"{sg}: tower length {len(seq.entries)}")
    rep.check(chain[-1] == NATURALS, f"{sg}: tower does not end at the naturals")
    for level in chain:
        level_ok, _ = arf.is_arf_stability(level)
        rep.check(level_ok, f"{sg}: tower level {level} is not Arf")
        rep.check(
            arf.has_minimal_multiplicity(level),
            f"{sg}: tower level {level} lacks minimal multiplicity",
        )
    rebuilt = arf.from_multiplicity_sequence(seq.entries)
    rep.check(rebuilt == sg, f"{sg}: multiplicity sequence {seq.entries} rebuilds {rebuilt}")


def check_vring_ideal_finiteness(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """The non-valuation-ring integrally closed ideals number exactly the
    members below the conductor; every later value gives a plain tail."""
    ok, _ = arf.is_arf_stability(sg)
    if not ok:
        return
    ideals = decomp.enumerate_non_normal_ideals(sg)
    below = [x for x in sg.small_elements if x < sg.conductor]
    rep.check(
        len(ideals) == len(below),
        f"{sg}: {len(ideals)} ideals vs {len(below)} members below conductor",
    )
    for a in range(sg.conductor, sg.conductor + 2 * sg.multiplicity + 1):
        rep.check(
            principal_closure(sg, a).value_set == CofiniteSet.tail(a),
            f"{sg}: ideal at {a} >= conductor is not the plain tail",
        )


def check_small_multiplicity(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """Multiplicity at most two forces the Arf property (both checkers)."""
    if sg.multiplicity > 2:
        return
    ok_s, _ = arf.is_arf_stability(sg)
    ok_p, _ = arf.is_arf_pattern(sg)
    rep.check(ok_s and ok_p, f"{sg}: multiplicity {sg.multiplicity} but not Arf")


def check_closure(rep: PropertyReport, sg: NumericalSemigroup) -> None:
    """The Arf closure contains the input, is Arf by both checkers, is
    idempotent, and matches brute-force pattern saturation."""
    closure = arf.arf_closure(sg)
    rep.check(sg.value_set.issubset(closure.value_set), f"{sg}: closure loses members")
    ok_s, _ = arf.is_arf_stability(closure)
    ok_p, _ = arf.is_arf_pattern(closure)
    rep.check(ok_s and ok_p, f"{sg}: closure {closure} is not Arf")
    rep.check(arf.arf_closure(closure) == closure, f"{sg}: closure not idempotent")
    bound = 2 * sg.conductor + sg.multiplicity + 2
    table = oracle.BoundedSet.from_values(bound, sg.value_set.members_upto(bound))
    saturated = oracle.oracle_pattern_saturate(table)
    exact = set(closure.value_set.members_upto(saturated.valid_hi))
    want = {v for v in saturated.members if v >= 0}
    rep.check(
        exact == want,
        f"{sg}: closure disagrees with pattern saturation inside [0, {saturated.valid_hi}]",
    )


def check_oracle_agreement(rep: PropertyReport, sg: NumericalSemigroup, rng: random.Random) -> None:
    """Product and colon agree with the window oracles on sampled ideal
    pairs; the compared region is checked to sit inside the guaranteed
    region."""
    values = _ideal_values(sg, sg.conductor + sg.multiplicity)
    picks = values if len(values) <= 4 else sorted(rng.sample(values, 4))
    for a in picks:
        for b in picks:
            left = principal_closure(sg, a)
            right = principal_closure(sg, b)
            bound = left.threshold + right.threshold + 8
            ta = oracle.BoundedSet.from_values(bound, left.value_set.members_upto(bound))
            tb = oracle.BoundedSet.from_values(bound, right.value_set.members_upto(bound))
            o_sum = oracle.oracle_sumset(ta, tb)
            exact_sum = left.product(right).value_set
            hi = o_sum.valid_hi
            rep.check(
                hi >= exact_sum.threshold + 2,
                f"{sg}: sumset window too small for a={a}, b={b}",
            )
            rep.check(
                set(exact_sum.members_upto(hi)) == {v for v in o_sum.members if v <= hi},
                f"{sg}: product a={a}, b={b} disagrees with the sumset oracle",
            )
            o_col = oracle.oracle_colon(ta, tb)
            exact_col = left.colon(right).value_set
            hi = o_col.valid_hi
            rep.check(
                hi >= exact_col.threshold + 2,
                f"{sg}: colon window too small for a={a}, b={b}",
            )
            rep.check(
                set(exact_col.members_upto(hi)) == {v for v in o_col.members if v <= hi},
                f"{sg}: colon a={a}, b={b} disagrees with the colon oracle",
            )


def check_worked_example(rep: PropertyReport) -> None:
    """Frozen regression: the worked 3-generator example with its tower,
    decomposition at value 6, and endpoint ring."""
    sg = NumericalSemigroup.from_generators([3, 11, 13])
    chain, seq = arf.lipman_tower(sg)
    expected = [
        NumericalSemigroup.from_generators([3, 11, 13]),
        NumericalSemigroup.from_generators([3, 8, 10]),
        NumericalSemigroup.from_generators([3, 5, 7]),
        NumericalSemigroup.from_generators([2, 3]),
        NATURALS,
    ]
    rep.check(chain == expected, f"tower {chain} differs from the frozen chain")
    rep.check(seq.entries == (3, 3, 3, 2), f"multiplicity sequence {seq.entries}")
    result = decomp.decompose(sg, 6)
    rep.check(result.q == 1, f"q = {result.q}")
    rep.check(result.verified, "factor product mismatch")
    rep.check(
        result.factors[0] == maximal_ideal(sg)
        and result.factors[1] == maximal_ideal(expected[1]),
        "factors are not the two expected maximal ideals",
    )
    rep.check(result.endpoint_ring == expected[2], f"endpoint {result.endpoint_ring}")
    rep.check(
        result.steps[0].radical.value_set == CofiniteSet.from_members([3, 6, 9], 11),
        "radical of the input ideal is not the maximal ideal",
    )
    rep.check(
        ValueIdeal(sg, result.steps[1].ideal.value_set).minimal_values() == (3, 8, 10),
        "level-1 ideal generators",
    )


PER_SEMIGROUP_CHECKS = [
    ("checker_equivalence", check_checker_equivalence),
    ("stable_ideal_criteria", check_stable_ideal_criteria),
    ("multiplier_ring_duality", check_multiplier_duality),
    ("multiplier_ring_reversal", check_endo_reversal),
    ("colon_decomposition", check_colon_of_pair),
    ("shifted_ideal_bijection", check_shifted_bijection),
    ("principality_equivalences", check_principality),
    ("maximal_ideal_decomposition", check_decomposition),
    ("tower_facts", check_tower_facts),
    ("valuation_ideal_finiteness", check_vring_ideal_finiteness),
    ("small_multiplicity_is_arf", check_small_multiplicity),
    ("arf_closure_properties", check_closure),
]


def run_battery(semigroups, seed: int = 0) -> dict:
    """Run every property over the given semigroups; deterministic under a fixed seed."""
    rng = random.Random(seed)
    reports = [PropertyReport(name) for name, _ in PER_SEMIGROUP_CHECKS]
    oracle_rep = PropertyReport("oracle_agreement")
    count = 0
    for sg in semigroups:
        count += 1
        for rep, (_, fn) in zip(reports, PER_SEMIGROUP_CHECKS):
            fn(rep, sg)
        check_oracle_agreement(oracle_rep, sg, rng)
    example_rep = PropertyReport("worked_example_regression")
    check_worked_example(example_rep)
    all_reports = reports + [oracle_rep, example_rep]
    return {
        "semigroups": count,
        "seed": seed,
        "properties": [r.to_json_dict() for r in all_reports],
        "ok": all(r.passed for r in all_reports),
    }
