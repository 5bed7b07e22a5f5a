"""Numerical semigroups: cofinite additive submonoids of the naturals.

A numerical semigroup stands for the complete local monomial ring it
generates inside the formal power series ring in one variable; all ring
invariants used here (multiplicity, embedding dimension, conductor) are
read off the value set exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyGenerators, InputError, InternalError, NonCoprime
from .intset import CofiniteSet


@dataclass(frozen=True)
class SemigroupStats:
    multiplicity: int
    conductor: int
    frobenius: int
    genus: int
    embedding_dimension: int
    minimal_generators: tuple[int, ...]


class NumericalSemigroup:
    """Canonical form: the members below the conductor plus the implicit tail.

    Instances are immutable; every operation is a pure function, so values
    can be shared freely across threads.
    """

    __slots__ = (
        "_set",
        "_mult",
        "_mingens",
        "_arf",
        "_tower",
        "_maxideal",
        "_unit",
        "_factor_prefix",
    )

    def __init__(self, value_set: CofiniteSet):
        # Trusted: value_set must be canonical with min element 0.
        self._set = value_set
        self._mult: int | None = None
        self._mingens: tuple[int, ...] | None = None
        self._arf = None  # cached Arf stability verdict, filled by arfkit.arf
        self._tower = None  # cached blow-up chain, filled by arfkit.arf
        self._maxideal = None  # cached maximal ideal, filled by arfkit.ideal
        self._unit = None  # cached unit ideal, filled by arfkit.ideal
        self._factor_prefix = None  # cached tower factor products, filled by arfkit.decomp

    # -- construction ---------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int], max_window: int | None = None) -> "NumericalSemigroup":
        """Smallest additive submonoid of the naturals containing ``gens``.

        Membership is computed by a dynamic-programming scan up to
        min(gens)*max(gens) + max(gens), which provably exceeds the largest
        gap of any coprime generating set, so the detected conductor is
        exact.
        """
        gens = tuple(gens)
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g < 1:
                raise InputError(f"generators must be positive integers, got {g!r}")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise NonCoprime(gens, d)
        lo, hi = min(gens), max(gens)
        bound = lo * hi + hi
        if max_window is not None and bound > max_window:
            from .errors import BoundLimitExceeded

            raise BoundLimitExceeded(
                f"membership scan window {bound} exceeds the cap {max_window}"
            )
        window = (1 << (bound + 1)) - 1
        reach = 1
        for g in sorted(set(gens)):
            while True:
                new = (reach | (reach << g)) & window
                if new == reach:
                    break
                reach = new
        conductor = (~reach & window).bit_length()
        mask = reach & ((1 << conductor) - 1)
        return cls(CofiniteSet(0, mask, conductor) if conductor else CofiniteSet.tail(0))

    @classmethod
    def from_value_set(cls, value_set: CofiniteSet) -> "NumericalSemigroup":
        """Wrap a value set, checking it really is a numerical semigroup."""
        if value_set.min_element != 0:
            raise InternalError(f"semigroup value set must start at 0: {value_set!r}")
        # 0 is a member, so closure under addition is S + S == S.
        if value_set.sumset(value_set) != value_set:
            raise InternalError(f"value set not closed under addition: {value_set!r}")
        return cls(value_set)

    # -- representation ---------------------------------------------------

    @property
    def value_set(self) -> CofiniteSet:
        return self._set

    @property
    def conductor(self) -> int:
        return self._set.threshold

    @property
    def small_elements(self) -> tuple[int, ...]:
        """Members below the conductor; contains 0 even for the full monoid."""
        els = self._set.elements
        return els if els else (0,)

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """Members that are not a sum of two nonzero members (cached)."""
        cached = self._mingens
        if cached is None:
            star = self._set.restrict_from(self.multiplicity if self.conductor else 1)
            sums = star.sumset(star)
            lo = star.min_element
            w = star.window_mask(lo, sums.threshold) & ~sums.window_mask(lo, sums.threshold)
            gens = []
            while w:
                low = w & -w
                gens.append(lo + low.bit_length() - 1)
                w ^= low
            cached = tuple(gens)
            self._mingens = cached
        return cached

    @property
    def multiplicity(self) -> int:
        m = self._mult
        if m is None:
            if self._set.threshold == 0:
                m = 1
            else:
                rest = self._set.mask & ~1
                m = (rest & -rest).bit_length() - 1 if rest else self._set.threshold
            self._mult = m
        return m

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def genus(self) -> int:
        return self.conductor - self._set.mask.bit_count()

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def stats(self) -> SemigroupStats:
        return SemigroupStats(
            multiplicity=self.multiplicity,
            conductor=self.conductor,
            frobenius=self.frobenius,
            genus=self.genus,
            embedding_dimension=self.embedding_dimension,
            minimal_generators=self.minimal_generators,
        )

    # -- queries ----------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        return n in self._set

    def contains(self, n: int) -> bool:
        return n in self._set

    def is_whole_line(self) -> bool:
        """True for the full monoid of naturals (the valuation-ring case)."""
        return self.conductor == 0

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"

    def __str__(self) -> str:
        return "⟨" + ",".join(str(g) for g in self.minimal_generators) + "⟩"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.minimal_generators),
            "small_elements": list(self.small_elements),
            "conductor": self.conductor,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "NumericalSemigroup":
        try:
            conductor = int(data["conductor"])
            small = [int(x) for x in data["small_elements"]]
            gens = [int(x) for x in data["generators"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed semigroup object: {exc}") from exc
        rebuilt = cls.from_generators(gens) if gens else None
        if rebuilt is None:
            raise InputError("malformed semigroup object: no generators")
        if rebuilt.conductor != conductor or list(rebuilt.small_elements) != small:
            raise InputError("inconsistent semigroup object: generators do not match elements")
        return rebuilt


NATURALS = NumericalSemigroup(CofiniteSet.tail(0))


def enumerate_semigroups(max_conductor: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup with conductor <= max_conductor, exactly once.

    Walks the tree rooted at the full monoid whose edges remove one minimal
    generator at least as large as the conductor; each semigroup apart from
    the root has the unique parent obtained by re-adding its largest gap.
    """
    stack = [NATURALS]
    while stack:
        sg = stack.pop()
        yield sg
        c = sg.conductor
        for g in sg.minimal_generators:
            if g >= c and g >= 1 and g + 1 <= max_conductor:
                mask = sg.value_set.window_mask(0, g + 1) & ~(1 << g)
                stack.append(NumericalSemigroup(CofiniteSet(0, mask, g + 1)))
