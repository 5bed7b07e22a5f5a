"""Arf-property checkers, Arf closure, blow-up towers, multiplicity sequences.

Two independent Arf criteria are shipped on purpose: the stability scan
(every integrally closed ideal has square equal to a shift) and the
pattern scan (x + y - z stays in the semigroup whenever z <= x, y).
Their agreement over exhaustive families is itself a high-value test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InternalError, InputError, InvalidSequence, NotArf
from .intset import CofiniteSet
from .semigroup import NATURALS, NumericalSemigroup
from .ideal import maximal_ideal


@dataclass(frozen=True)
class ArfWitness:
    """A certificate refuting the Arf property.

    Either a pattern triple (x, y, z) with x >= y >= z and x + y - z
    outside the semigroup, or the minimum value of a non-stable
    integrally closed ideal.
    """

    kind: str  # "pattern_triple" | "unstable_ideal"
    triple: tuple[int, int, int] | None = None
    ideal_min: int | None = None

    def describe(self) -> str:
        if self.kind == "pattern_triple":
            x, y, z = self.triple  # type: ignore[misc]
            return f"x={x} y={y} z={z}, x+y−z={x + y - z} ∉ S"
        return f"the integrally closed ideal at value {self.ideal_min} is not stable"

    def refutes(self, sg: NumericalSemigroup) -> bool:
        """Re-check that this witness really refutes the Arf property of ``sg``."""
        if self.kind == "pattern_triple":
            assert self.triple is not None
            x, y, z = self.triple
            return (
                x in sg and y in sg and z in sg
                and z <= x and z <= y
                and (x + y - z) not in sg
            )
        assert self.ideal_min is not None
        a = self.ideal_min
        if a not in sg:
            return False
        closed = sg.value_set.restrict_from(a)
        return closed.sumset(closed) != closed.shift(a)

    def to_json_dict(self) -> dict:
        if self.kind == "pattern_triple":
            assert self.triple is not None
            return {"kind": self.kind, "triple": list(self.triple)}
        return {"kind": self.kind, "ideal_min": self.ideal_min}


def is_arf_stability(sg: NumericalSemigroup) -> tuple[bool, ArfWitness | None]:
    """Arf test via stability of every integrally closed ideal.

    Only minimum values up to the conductor need scanning: at or beyond
    it the ideal is a shifted copy of the naturals, which is always
    stable.  Returns the least failing value as witness.  The verdict is
    cached on the (immutable) semigroup.
    """
    cached = sg._arf
    if cached is not None:
        return cached
    cs = sg.value_set
    result: tuple[bool, ArfWitness | None] = (True, None)
    for a in cs.members_upto(sg.conductor):
        closed = cs.restrict_from(a)
        if closed.sumset(closed) != closed.shift(a):
            result = (False, ArfWitness(kind="unstable_ideal", ideal_min=a))
            break
    sg._arf = result
    return result


def is_arf_pattern(sg: NumericalSemigroup) -> tuple[bool, ArfWitness | None]:
    """Arf test via the pattern x + y - z for members z <= x, y.

    The scan window x, y <= 2*conductor + multiplicity is complete:
    beyond it x + y - z is at least the conductor, hence automatically a
    member.  On failure returns the witness with least z, then least y,
    then least x.
    """
    cs = sg.value_set
    c = sg.conductor
    w = 2 * c + sg.multiplicity
    members = cs.members_upto(w)
    full = cs.window_mask(0, w + 1)
    for z in members:
        tw = full >> z  # members of S in [z, w], anchored at z
        acc = 0
        t = tw
        while t:
            low = t & -t
            acc |= tw << (low.bit_length() - 1)
            t ^= low
        # bit i of acc is a sum x + y = 2z + i; it needs z + i in S
        need = cs.window_mask(z, z + 2 * (w - z) + 1)
        if acc & ~need:
            for y in members:
                if y < z:
                    continue
                for x in members:
                    if x < y:
                        continue
                    if (x + y - z) not in cs:
                        return False, ArfWitness(kind="pattern_triple", triple=(x, y, z))
            raise InternalError("pattern mask scan disagreed with the scalar rescan")
    return True, None


class MultiplicitySequence:
    """Multiplicities along the blow-up chain, trimmed of the trailing 1s.

    Valid sequences are exactly those whose partial-sum set at every
    level is closed under addition; this is checked at construction,
    level by level from the top.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: tuple[int, ...]):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise InputError(f"multiplicity entries must be positive integers, got {e!r}")
        self._validate(entries)
        while entries and entries[-1] == 1:
            entries = entries[:-1]
        self.entries = entries

    @staticmethod
    def _validate(entries: tuple[int, ...]) -> None:
        for i in range(len(entries)):
            suffix = entries[i:]
            total = sum(suffix)
            psums = [0]
            for e in suffix:
                psums.append(psums[-1] + e)
            level = CofiniteSet.from_members(psums, total)
            if level.sumset(level) != level:
                bad = _first_closure_violation(level)
                raise InvalidSequence(
                    entries,
                    i,
                    sum(entries[:i]),
                    f"starts a level whose partial-sum set is not closed under addition "
                    f"({bad[0]} + {bad[1]} = {bad[0] + bad[1]} is missing)",
                )

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiplicitySequence):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"MultiplicitySequence{self.entries}"

    def to_semigroup(self) -> NumericalSemigroup:
        """The partial-sum semigroup: {0, e0, e0+e1, ...} plus the tail of 1s."""
        psums = [0]
        for e in self.entries:
            psums.append(psums[-1] + e)
        total = psums[-1]
        return NumericalSemigroup.from_value_set(CofiniteSet.from_members(psums, total))

    def to_json_list(self) -> list[int]:
        return list(self.entries)


def _first_closure_violation(cs: CofiniteSet) -> tuple[int, int]:
    els = cs.elements
    for a in els:
        if a == 0:
            continue
        for b in els:
            if b < a:
                continue
            if (a + b) not in cs:
                return a, b
    raise InternalError("no closure violation found in a set reported as not closed")


def from_multiplicity_sequence(entries) -> NumericalSemigroup:
    """Inverse of the blow-up tower for Arf semigroups."""
    return MultiplicitySequence(tuple(entries)).to_semigroup()


def lipman_tower(sg: NumericalSemigroup) -> tuple[list[NumericalSemigroup], MultiplicitySequence]:
    """The blow-up chain from ``sg`` up to the naturals, with its multiplicities.

    Each level is the multiplier ring of the maximal ideal of the level
    below.  Requires an Arf input; for Arf semigroups the shifted maximal
    ideal is already closed under addition, which is asserted.
    """
    ok, witness = is_arf_stability(sg)
    if not ok:
        raise NotArf(sg, witness)
    cached = sg._tower
    if cached is not None:
        return cached
    chain = [sg]
    entries: list[int] = []
    level = sg
    guard = sg.genus + 2
    while level.conductor > 0:
        e = level.multiplicity
        nxt = maximal_ideal(level).endo_ring()
        if nxt.value_set != level.value_set.restrict_from(e).shift(-e):
            raise InternalError("blow-up of an Arf semigroup needed re-closure")
        entries.append(e)
        chain.append(nxt)
        level = nxt
        if len(entries) > guard:
            raise InternalError("blow-up chain exceeded the genus bound")
    result = (chain, MultiplicitySequence(tuple(entries)))
    sg._tower = result
    return result


def arf_closure(sg: NumericalSemigroup) -> NumericalSemigroup:
    """The smallest Arf numerical semigroup containing ``sg``.

    Runs the blow-up chain, re-closing the shifted set under addition
    whenever needed, and returns the partial-sum semigroup of the
    resulting multiplicity sequence.
    """
    entries: list[int] = []
    cur = sg.value_set
    while cur.threshold > 0:
        rest = cur.mask & ~1
        e = (rest & -rest).bit_length() - 1 if rest else cur.threshold
        shifted = cur.restrict_from(e).shift(-e)
        cur = _additive_closure(shifted)
        entries.append(e)
    if not entries:
        return NATURALS
    return MultiplicitySequence(tuple(entries)).to_semigroup()


def _additive_closure(cs: CofiniteSet) -> CofiniteSet:
    # cs contains 0, so cs is contained in cs + cs; iterate to the fixpoint.
    while True:
        nxt = cs.sumset(cs)
        if nxt == cs:
            return cs
        cs = nxt


def has_minimal_multiplicity(sg: NumericalSemigroup) -> bool:
    """Whether the maximal ideal is stable (embedding dimension = multiplicity)."""
    return maximal_ideal(sg).is_stable()


def enumerate_arf_semigroups(max_conductor: int) -> Iterator[NumericalSemigroup]:
    """Every Arf numerical semigroup with conductor <= max_conductor, once.

    Children of a semigroup T are the sets {0} union (e + T) for nonzero
    members e of T; these are exactly the Arf semigroups whose blow-up is
    T, so the walk covers each Arf semigroup exactly once.
    """
    stack = [NATURALS]
    while stack:
        sg = stack.pop()
        yield sg
        c = sg.conductor
        cap = max_conductor - c if c > 0 else max_conductor
        for e in sg.value_set.members_upto(cap):
            if e < 1 or (e < 2 and c == 0):
                continue
            shifted = sg.value_set.shift(e)
            cs = CofiniteSet.from_members((0,) + shifted.elements, shifted.threshold)
            stack.append(NumericalSemigroup(cs))
