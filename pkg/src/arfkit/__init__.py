"""arfkit: exact arithmetic for Arf numerical semigroup rings.

Construct numerical semigroups, compute with their monomial ideals
(colon, product, radical, integral closure, stability, multiplier and
blow-up rings), test and certify the Arf property, take Arf closures,
climb blow-up towers, and decompose integrally closed ideals into
products of maximal ideals along the tower.
"""

from .arf import (
    ArfWitness,
    MultiplicitySequence,
    arf_closure,
    enumerate_arf_semigroups,
    from_multiplicity_sequence,
    has_minimal_multiplicity,
    is_arf_pattern,
    is_arf_stability,
    lipman_tower,
)
from .decomp import (
    DecompositionResult,
    PrincipalityTriple,
    TowerStep,
    decompose,
    decompose_fast,
    enumerate_non_normal_ideals,
    partial_products_check,
    principality_triple,
)
from .errors import (
    AmbientMismatch,
    ArfkitError,
    BoundLimitExceeded,
    BoundMismatch,
    EmptyGenerators,
    FractionalInput,
    InputError,
    InternalError,
    InvalidSequence,
    NonCoprime,
    NotArf,
    NotInSemigroup,
    UnitIdeal,
)
from .ideal import (
    IntegrallyClosedIdeal,
    ValueIdeal,
    maximal_ideal,
    principal_closure,
    unit_ideal,
)
from .intset import CofiniteSet
from .semigroup import (
    NATURALS,
    NumericalSemigroup,
    SemigroupStats,
    enumerate_semigroups,
)

__version__ = "0.1.0"

__all__ = [
    "ArfWitness",
    "ArfkitError",
    "AmbientMismatch",
    "BoundLimitExceeded",
    "BoundMismatch",
    "CofiniteSet",
    "DecompositionResult",
    "EmptyGenerators",
    "FractionalInput",
    "InputError",
    "IntegrallyClosedIdeal",
    "InternalError",
    "InvalidSequence",
    "MultiplicitySequence",
    "NATURALS",
    "NonCoprime",
    "NotArf",
    "NotInSemigroup",
    "NumericalSemigroup",
    "PrincipalityTriple",
    "SemigroupStats",
    "TowerStep",
    "UnitIdeal",
    "ValueIdeal",
    "arf_closure",
    "decompose",
    "decompose_fast",
    "enumerate_arf_semigroups",
    "enumerate_non_normal_ideals",
    "enumerate_semigroups",
    "from_multiplicity_sequence",
    "has_minimal_multiplicity",
    "is_arf_pattern",
    "is_arf_stability",
    "lipman_tower",
    "maximal_ideal",
    "partial_products_check",
    "principal_closure",
    "principality_triple",
    "unit_ideal",
]
