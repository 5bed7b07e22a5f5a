"""Exception types shared across arfkit."""

from __future__ import annotations


class ArfkitError(Exception):
    """Base class for all arfkit errors."""


class InputError(ArfkitError):
    """Malformed or out-of-domain user input (CLI exit code 2)."""


class EmptyGenerators(InputError):
    """A semigroup or ideal was requested from an empty generator list."""


class NonCoprime(InputError):
    """Generators with gcd != 1 would not give a cofinite semigroup."""

    def __init__(self, gens, g):
        super().__init__(f"gcd({', '.join(map(str, gens))}) = {g} != 1; semigroup would not be cofinite")
        self.gens = tuple(gens)
        self.gcd = g


class NotInSemigroup(InputError):
    """A value was required to lie in the semigroup but does not."""

    def __init__(self, value, semigroup):
        super().__init__(f"{value} is not an element of {semigroup}")
        self.value = value
        self.semigroup = semigroup


class UnitIdeal(InputError):
    """An operation that needs a proper ideal was given the unit ideal."""


class AmbientMismatch(InputError):
    """Two ideals over different semigroups were combined where a common ambient is required."""


class FractionalInput(InputError):
    """An integral-only ideal operation received a fractional ideal."""


class InvalidSequence(InputError):
    """A multiplicity sequence whose partial-sum set is not an Arf semigroup."""

    def __init__(self, entries, index, partial_sum, reason):
        super().__init__(
            f"invalid multiplicity sequence {tuple(entries)}: entry {entries[index]} at index {index} "
            f"(partial sum {partial_sum}) {reason}"
        )
        self.entries = tuple(entries)
        self.index = index
        self.partial_sum = partial_sum


class NotArf(ArfkitError):
    """The operation requires an Arf semigroup; carries a refuting witness (CLI exit code 1)."""

    def __init__(self, semigroup, witness):
        super().__init__(f"{semigroup} is not Arf: {witness.describe()}")
        self.semigroup = semigroup
        self.witness = witness


class BoundLimitExceeded(InputError):
    """The membership scan window for the requested generators exceeds the safety cap."""


class BoundMismatch(ArfkitError):
    """Oracle inputs with different windows cannot be combined."""


class InternalError(ArfkitError):
    """An internal invariant was violated; always a bug (CLI exit code 3)."""
