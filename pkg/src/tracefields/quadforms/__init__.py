"""Rational and local invariants of quadratic forms and the equivalence pipelines."""

from .decide import (
    EQUIVALENT,
    HYPOTHESES_NOT_MET,
    NOT_EQUIVALENT,
    SAME_SPINOR_GENUS,
    UNDETERMINED,
    EquivalenceVerdict,
    ProofStep,
    decide_theorem_general,
    same_genus_tame,
    watson_spinor_criterion,
)
from .genus import GenusSymbol, genus_symbol, same_genus
from .hilbert import INF, LocalProfile, hasse_invariant, hilbert_symbol, local_profile, rationally_equivalent

__all__ = [
    "EQUIVALENT",
    "HYPOTHESES_NOT_MET",
    "INF",
    "NOT_EQUIVALENT",
    "SAME_SPINOR_GENUS",
    "UNDETERMINED",
    "EquivalenceVerdict",
    "GenusSymbol",
    "LocalProfile",
    "ProofStep",
    "decide_theorem_general",
    "genus_symbol",
    "hasse_invariant",
    "hilbert_symbol",
    "local_profile",
    "rationally_equivalent",
    "same_genus",
    "same_genus_tame",
    "watson_spinor_criterion",
]
