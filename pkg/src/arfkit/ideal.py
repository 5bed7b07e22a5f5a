"""Monomial (value) ideals over a numerical semigroup.

A value ideal is a bounded-below integer set E with E + S inside E; it
stands for a fractional monomial ideal of the semigroup ring.  Integral
ideals additionally sit inside S itself.  Colon, product, radical,
integral closure, stability, and the two blow-up rings are all computed
exactly via threshold arithmetic on :class:`~arfkit.intset.CofiniteSet`.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    AmbientMismatch,
    EmptyGenerators,
    FractionalInput,
    InputError,
    InternalError,
    NotInSemigroup,
)
from .intset import CofiniteSet
from .semigroup import NumericalSemigroup


class ValueIdeal:
    """A (possibly fractional) monomial ideal, given by its value set."""

    __slots__ = ("ambient", "_set", "_endo")

    def __init__(self, ambient: NumericalSemigroup, value_set: CofiniteSet):
        # Trusted: value_set must already satisfy E + S inside E.
        self.ambient = ambient
        self._set = value_set
        self._endo: NumericalSemigroup | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_values(cls, ambient: NumericalSemigroup, gens: Iterable[int]) -> "ValueIdeal":
        """The ideal generated by ``gens``: the value set gens + S."""
        gens = tuple(gens)
        if not gens:
            raise EmptyGenerators("an ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool):
                raise InputError(f"ideal generators must be integers, got {g!r}")
        acc: CofiniteSet | None = None
        base = ambient.value_set
        for g in sorted(set(gens)):
            shifted = base.shift(g)
            acc = shifted if acc is None else acc.union(shifted)
        assert acc is not None
        return cls(ambient, acc)

    # -- views --------------------------------------------------------------

    @property
    def value_set(self) -> CofiniteSet:
        return self._set

    @property
    def small_elements(self) -> tuple[int, ...]:
        return self._set.elements

    @property
    def threshold(self) -> int:
        return self._set.threshold

    @property
    def min_value(self) -> int:
        return self._set.min_element

    @property
    def is_integral(self) -> bool:
        return self._set.min_element >= 0 and self._set.issubset(self.ambient.value_set)

    def minimal_values(self) -> tuple[int, ...]:
        """Values generating this ideal: members not in E + (S minus 0)."""
        star = self.ambient.value_set.restrict_from(
            self.ambient.multiplicity if self.ambient.conductor else 1
        )
        sums = self._set.sumset(star)
        lo = self._set.min_element
        w = self._set.window_mask(lo, sums.threshold) & ~sums.window_mask(lo, sums.threshold)
        out = []
        while w:
            low = w & -w
            out.append(lo + low.bit_length() - 1)
            w ^= low
        return tuple(out)

    def __contains__(self, value: int) -> bool:
        return value in self._set

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, ValueIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.ambient, self._set))

    def __repr__(self) -> str:
        body = ", ".join(f"t^{v}" if v != 1 else "t" for v in self.minimal_values())
        return f"({body}) over {self.ambient}"

    # -- arithmetic ----------------------------------------------------------

    def _require_same_ambient(self, other: "ValueIdeal") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch(
                f"ideals live over different semigroups: {self.ambient} vs {other.ambient}"
            )

    def _require_integral(self) -> None:
        if not self.is_integral:
            raise FractionalInput(f"operation needs an integral ideal, got {self!r}")

    def product(self, other: "ValueIdeal") -> "ValueIdeal":
        """Ideal product; on value sets this is the exact Minkowski sum."""
        self._require_same_ambient(other)
        return ValueIdeal(self.ambient, self._set.sumset(other._set))

    def colon(self, other: "ValueIdeal") -> "ValueIdeal":
        """The colon ideal {z : z + other inside self}, possibly fractional."""
        self._require_same_ambient(other)
        return ValueIdeal(self.ambient, self._set.colon(other._set))

    def shift(self, d: int) -> "ValueIdeal":
        return ValueIdeal(self.ambient, self._set.shift(d))

    def integral_closure(self) -> "IntegrallyClosedIdeal":
        """Everything in S at or above the minimum value."""
        self._require_integral()
        a = self._set.min_element
        return IntegrallyClosedIdeal(self.ambient, self.ambient.value_set.restrict_from(a), a)

    def radical(self) -> "IntegrallyClosedIdeal":
        """The unit ideal for the unit ideal, else the maximal ideal."""
        self._require_integral()
        if self._set.min_element == 0:
            return unit_ideal(self.ambient)
        return maximal_ideal(self.ambient)

    def is_stable(self) -> bool:
        """Whether E + E equals min(E) + E, i.e. the square equals a shift."""
        self._require_integral()
        return self._set.sumset(self._set) == self._set.shift(self._set.min_element)

    def endo_ring(self) -> NumericalSemigroup:
        """The multiplier ring E : E, as a numerical semigroup (cached)."""
        cached = self._endo
        if cached is not None:
            return cached
        self._require_integral()
        ring = NumericalSemigroup.from_value_set(self._set.colon(self._set))
        self._endo = ring
        return ring

    def blowup_ring(self) -> NumericalSemigroup:
        """The stabilized union of the multiplier rings of the powers of E.

        The set nE - n*min(E) ascends inside a fixed finite window, so the
        powers reach a shift-periodic state; from that point on all
        multiplier rings coincide and equal the union.
        """
        self._require_integral()
        cs = self._set
        a = cs.min_element
        norm_prev = cs.shift(-a)
        power = cs
        cap = (cs.threshold - a) + self.ambient.conductor + 3
        for _ in range(cap):
            power = power.sumset(cs)
            norm = power.shift(-power.min_element)
            if norm == norm_prev:
                return NumericalSemigroup.from_value_set(power.colon(power))
            norm_prev = norm
        raise InternalError("blow-up ring iteration failed to stabilize")

    def dual(self) -> "ValueIdeal":
        """The fractional ideal S : E."""
        return ValueIdeal(self.ambient, self.ambient.value_set.colon(self._set))

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_json_dict(),
            "elements": list(self.small_elements),
            "threshold": self.threshold,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ValueIdeal":
        try:
            ambient = NumericalSemigroup.from_json_dict(data["ambient"])
            elements = [int(x) for x in data["elements"]]
            threshold = int(data["threshold"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed ideal object: {exc}") from exc
        cs = CofiniteSet.from_members(elements, threshold)
        if cs.elements != tuple(elements) or cs.threshold != threshold:
            raise InputError("inconsistent ideal object: elements/threshold not canonical")
        ideal = cls(ambient, cs)
        if cs.sumset(ambient.value_set) != cs:
            raise InputError("inconsistent ideal object: not closed under adding the semigroup")
        return ideal


class IntegrallyClosedIdeal(ValueIdeal):
    """An integrally closed ideal: exactly the members of S at or above ``min_value``."""

    __slots__ = ("min_value",)

    def __init__(self, ambient: NumericalSemigroup, value_set: CofiniteSet, min_value: int):
        self.ambient = ambient
        self._set = value_set
        self._endo = None
        self.min_value = min_value

    @property
    def is_integral(self) -> bool:
        # Integral by construction: the value set is S from min_value up.
        return True

    def radical(self) -> "IntegrallyClosedIdeal":
        return maximal_ideal(self.ambient) if self.min_value else unit_ideal(self.ambient)


def principal_closure(ambient: NumericalSemigroup, a: int) -> IntegrallyClosedIdeal:
    """The integral closure of the principal ideal at value ``a``: {s in S : s >= a}."""
    if a not in ambient:
        raise NotInSemigroup(a, ambient)
    return IntegrallyClosedIdeal(ambient, ambient.value_set.restrict_from(a), a)


def unit_ideal(ambient: NumericalSemigroup) -> IntegrallyClosedIdeal:
    cached = ambient._unit
    if cached is None:
        cached = IntegrallyClosedIdeal(ambient, ambient.value_set, 0)
        ambient._unit = cached
    return cached


def maximal_ideal(ambient: NumericalSemigroup) -> IntegrallyClosedIdeal:
    """The maximal ideal: every nonzero member of S (cached on the semigroup)."""
    cached = ambient._maxideal
    if cached is None:
        e = ambient.multiplicity if ambient.conductor else 1
        cached = IntegrallyClosedIdeal(ambient, ambient.value_set.restrict_from(e), e)
        ambient._maxideal = cached
    return cached
