"""Number fields: maximal orders, signatures, splitting types and conjugacy."""

from .conjugacy import ConjugacyResult, are_conjugate, split_certificate
from .field import (
    NumberField,
    PrimeSplit,
    field_from_poly,
    is_fundamental_disc,
    is_tame_at,
    monic_model,
    signature,
    splitting_type,
)
from .round2 import maximal_order

__all__ = [
    "ConjugacyResult",
    "NumberField",
    "PrimeSplit",
    "are_conjugate",
    "field_from_poly",
    "is_fundamental_disc",
    "is_tame_at",
    "maximal_order",
    "monic_model",
    "signature",
    "split_certificate",
    "splitting_type",
]
