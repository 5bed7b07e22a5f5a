"""Decomposition of integrally closed ideals into products of maximal ideals.

Over an Arf semigroup, the recursion

    ring(n+1) = radical(n) : radical(n),   ideal(n+1) = ideal(n) : radical(n)

climbs a tower of semigroups until the carried ideal becomes the unit
ideal; the radicals collected along the way are maximal ideals of the
tower rings and multiply back to the input ideal.  ``decompose`` runs
that recursion literally; ``decompose_fast`` reads the same data off the
blow-up tower and must agree step for step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arf import is_arf_stability, lipman_tower
from .errors import InternalError, NotArf, NotInSemigroup, UnitIdeal
from .ideal import (
    IntegrallyClosedIdeal,
    ValueIdeal,
    maximal_ideal,
    principal_closure,
    unit_ideal,
)
from .intset import CofiniteSet
from .semigroup import NumericalSemigroup


class TowerStep:
    """One level of the recursion: its ring, ideal, radical, and cumulative shift."""

    __slots__ = ("index", "ring", "ideal", "radical", "shift")

    def __init__(self, index, ring, ideal, radical, shift):
        self.index = index
        self.ring = ring
        self.ideal = ideal
        self.radical = radical
        self.shift = shift

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TowerStep):
            return NotImplemented
        if self.index != other.index or self.shift != other.shift:
            return False
        if self.ring is not other.ring and self.ring != other.ring:
            return False
        a, b = self.ideal, other.ideal
        if a is not b and (a._set != b._set or a.ambient != b.ambient):
            return False
        a, b = self.radical, other.radical
        if a is not b and (a._set != b._set or a.ambient != b.ambient):
            return False
        return True

    def __repr__(self) -> str:
        return f"TowerStep({self.index}, ring={self.ring}, shift={self.shift})"

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring.to_json_dict(),
            "ideal": _values_json(self.ideal),
            "radical": _values_json(self.radical),
            "shift": self.shift,
        }


@dataclass(frozen=True, eq=True)
class DecompositionResult:
    """The full tower, the index q of the last proper ideal, and the factors."""

    semigroup: NumericalSemigroup
    a: int
    steps: tuple[TowerStep, ...]
    q: int
    factors: tuple[IntegrallyClosedIdeal, ...]
    endpoint_ring: NumericalSemigroup
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "semigroup": self.semigroup.to_json_dict(),
            "a": self.a,
            "q": self.q,
            "tower": [step.to_json_dict() for step in self.steps],
            "factors": [
                {"ring": f.ambient.to_json_dict(), "values": _values_json(f)}
                for f in self.factors
            ],
            "endpoint_B": self.endpoint_ring.to_json_dict(),
            "verified": self.verified,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DecompositionResult":
        semigroup = NumericalSemigroup.from_json_dict(data["semigroup"])
        steps = []
        for i, raw in enumerate(data["tower"]):
            ring = NumericalSemigroup.from_json_dict(raw["ring"])
            ideal = ValueIdeal(ring, _values_from_json(raw["ideal"]))
            rad_set = _values_from_json(raw["radical"])
            radical = IntegrallyClosedIdeal(ring, rad_set, rad_set.min_element)
            steps.append(TowerStep(i, ring, ideal, radical, int(raw["shift"])))
        factors = []
        for raw in data["factors"]:
            ring = NumericalSemigroup.from_json_dict(raw["ring"])
            vs = _values_from_json(raw["values"])
            factors.append(IntegrallyClosedIdeal(ring, vs, vs.min_element))
        return cls(
            semigroup=semigroup,
            a=int(data["a"]),
            steps=tuple(steps),
            q=int(data["q"]),
            factors=tuple(factors),
            endpoint_ring=NumericalSemigroup.from_json_dict(data["endpoint_B"]),
            verified=bool(data["verified"]),
        )


def _values_json(ideal: ValueIdeal) -> dict:
    return {"elements": list(ideal.small_elements), "threshold": ideal.threshold}


def _values_from_json(data: dict) -> CofiniteSet:
    return CofiniteSet.from_members([int(x) for x in data["elements"]], int(data["threshold"]))


def product_of_value_sets(sets: Sequence[CofiniteSet], unit: CofiniteSet) -> CofiniteSet:
    """Plain iterated sumset; the empty product is the given unit value set.

    Factors from different tower rings multiply as submodules of the
    common fraction field, which at the value level is just the sumset,
    so no ambient is enforced here.
    """
    acc = unit
    for cs in sets:
        acc = acc.sumset(cs)
    return acc


def decompose(sg: NumericalSemigroup, a: int) -> DecompositionResult:
    """Run the literal colon/radical recursion for the ideal at value ``a``.

    Stops when the carried ideal reaches minimum value 0 (the unit
    ideal).  ``verified`` is set only after re-multiplying the collected
    factors and comparing against {s in S : s >= a}.  For a = 0 the
    result has q = -1 and no factors.
    """
    ok, witness = is_arf_stability(sg)
    if not ok:
        raise NotArf(sg, witness)
    if a not in sg:
        raise NotInSemigroup(a, sg)
    target = principal_closure(sg, a)
    target_set = target.value_set
    steps: list[TowerStep] = []
    append = steps.append
    ring = sg
    ideal_set = target_set
    shift = 0
    n = 0
    guard = sg.genus + a + 3
    while True:
        min_v = ideal_set.offset if ideal_set.mask else ideal_set.threshold
        if not ideal_set.eq_shifted(target_set, -shift):
            raise InternalError("step ideal is not the input ideal shifted by the level shift")
        if not ring._set.restricted_equals(min_v, ideal_set):
            raise InternalError("step ideal is not integrally closed in its ring")
        ideal_n = IntegrallyClosedIdeal(ring, ideal_set, min_v)
        radical_n = ideal_n.radical()
        append(TowerStep(n, ring, ideal_n, radical_n, shift))
        if min_v == 0:
            break
        shift += ring.multiplicity
        ring = radical_n.endo_ring()
        ideal_set = ideal_set.colon(radical_n._set)
        n += 1
        if n > guard:
            raise InternalError("decomposition recursion exceeded its termination bound")
    q = n - 1
    factors = tuple(step.radical for step in steps[:-1])
    endpoint = target.endo_ring()
    if endpoint != steps[-1].ring:
        raise InternalError("tower endpoint differs from the multiplier ring of the input")
    product = product_of_value_sets([f._set for f in factors], sg._set)
    return DecompositionResult(
        semigroup=sg,
        a=a,
        steps=tuple(steps),
        q=q,
        factors=factors,
        endpoint_ring=endpoint,
        verified=product == target_set,
    )


def decompose_fast(sg: NumericalSemigroup, a: int) -> DecompositionResult:
    """Read the decomposition off the blow-up tower instead of recursing.

    The number of factors is the number of multiplicity-sequence entries
    (extended by the tail of 1s) whose prefix sums to ``a``; for an Arf
    semigroup every member is such a prefix sum, which is enforced as an
    internal invariant.  Must agree with :func:`decompose` structurally.
    """
    ok, witness = is_arf_stability(sg)
    if not ok:
        raise NotArf(sg, witness)
    if a not in sg:
        raise NotInSemigroup(a, sg)
    chain, seq = lipman_tower(sg)
    top = len(seq.entries)
    psums = [0]
    for e in seq.entries:
        psums.append(psums[-1] + e)
    total = psums[-1]
    if a <= total:
        if a not in psums:
            raise InternalError(
                f"{a} is a member below the conductor but not a prefix sum of {seq.entries}"
            )
        count = psums.index(a)
    else:
        count = top + (a - total)
    target = principal_closure(sg, a)
    target_set = target.value_set
    steps = []
    append = steps.append
    for n in range(count + 1):
        ring = chain[n] if n <= top else chain[top]
        shift = psums[n] if n <= top else total + (n - top)
        ideal_n = IntegrallyClosedIdeal(ring, target_set.shift(-shift), a - shift)
        radical_n = maximal_ideal(ring) if n < count else unit_ideal(ring)
        append(TowerStep(n, ring, ideal_n, radical_n, shift))
    factors = tuple(step.radical for step in steps[:-1])
    endpoint = chain[count] if count <= top else chain[top]
    # prefix products of the tower factors depend only on sg; extend the
    # cached list as far as this value needs
    prefixes = sg._factor_prefix
    if prefixes is None:
        prefixes = [sg._set]
        sg._factor_prefix = prefixes
    while len(prefixes) <= count:
        ring = chain[len(prefixes) - 1] if len(prefixes) - 1 <= top else chain[top]
        prefixes.append(prefixes[-1].sumset(maximal_ideal(ring)._set))
    return DecompositionResult(
        semigroup=sg,
        a=a,
        steps=tuple(steps),
        q=count - 1,
        factors=factors,
        endpoint_ring=endpoint,
        verified=prefixes[count] == target_set,
    )


def partial_products_check(result: DecompositionResult, ideal: ValueIdeal) -> bool:
    """Whether radical(0)...radical(n) * ideal(n+1) re-multiplies to ``ideal`` for every n <= q.

    The radical prefix grows by one sumset per level, so the whole check
    is linear in the tower length.
    """
    want = ideal.value_set
    prefix: CofiniteSet | None = None
    for n in range(result.q + 1):
        rad = result.steps[n].radical._set
        prefix = rad if prefix is None else prefix.sumset(rad)
        if prefix.sumset(result.steps[n + 1].ideal._set) != want:
            return False
    return True


def enumerate_non_normal_ideals(sg: NumericalSemigroup) -> list[IntegrallyClosedIdeal]:
    """The integrally closed ideals that are not ideals of the valuation ring.

    These are exactly the ones whose minimum value lies below the
    conductor: at or beyond it the value set is a plain tail
    {a, a+1, ...}.  Each returned ideal is re-checked to miss some value
    in [a, conductor).
    """
    ok, witness = is_arf_stability(sg)
    if not ok:
        raise NotArf(sg, witness)
    out = []
    for a in sg.value_set.members_upto(sg.conductor - 1):
        ideal = principal_closure(sg, a)
        if ideal.value_set == CofiniteSet.tail(a):
            raise InternalError(f"ideal at {a} below the conductor has no gap")
        out.append(ideal)
    return out


@dataclass(frozen=True)
class PrincipalityTriple:
    ideal_principal: bool
    radical_principal: bool
    ring_is_dvr: bool

    def to_json_dict(self) -> dict:
        return {
            "ideal_principal": self.ideal_principal,
            "radical_principal": self.radical_principal,
            "ring_is_dvr": self.ring_is_dvr,
        }


def principality_triple(sg: NumericalSemigroup, a: int) -> PrincipalityTriple:
    """Equivalence of: the ideal at ``a`` is principal, its radical is, the ring is a DVR.

    The three answers are provably equal in this local model; their
    agreement is asserted, so a mismatch is a bug rather than a result.
    """
    if a not in sg:
        raise NotInSemigroup(a, sg)
    if a == 0:
        raise UnitIdeal("need a proper ideal; got the unit ideal (a = 0)")
    vs = sg.value_set
    ideal_principal = vs.restrict_from(a) == vs.shift(a)
    e = sg.multiplicity
    radical_principal = vs.restrict_from(e) == vs.shift(e)
    ring_is_dvr = sg.conductor == 0
    if not (ideal_principal == radical_principal == ring_is_dvr):
        raise InternalError("principality equivalences disagreed")
    return PrincipalityTriple(ideal_principal, radical_principal, ring_is_dvr)
