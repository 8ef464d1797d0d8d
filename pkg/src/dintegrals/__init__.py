"""Derivations and d-integrals on finite and polynomial semirings."""

from .errors import (
    BoundTooSmall,
    CapacityExceeded,
    ClosureViolated,
    HypothesisUnmet,
    InvalidDerivation,
    MalformedMap,
    MalformedTable,
    NotIntegrable,
    SemiringError,
    SemiringMismatch,
)
from .core import AxiomReport, ElemSet, FiniteSemiring, validate_semiring
from .derivations import Derivation, enumerate_derivations, zero_derivation
from .integrals import IntegralTable, LawReport, LawResult

__all__ = [
    "AxiomReport",
    "BoundTooSmall",
    "CapacityExceeded",
    "ClosureViolated",
    "Derivation",
    "ElemSet",
    "FiniteSemiring",
    "HypothesisUnmet",
    "InvalidDerivation",
    "IntegralTable",
    "LawReport",
    "LawResult",
    "MalformedMap",
    "MalformedTable",
    "NotIntegrable",
    "SemiringError",
    "SemiringMismatch",
    "enumerate_derivations",
    "validate_semiring",
    "zero_derivation",
]
