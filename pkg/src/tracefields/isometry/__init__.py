"""Positive definite lattices: short vectors, theta slices and isometry testing."""

from .brute import brute_force_isometric
from .enumeration import ShortVectorSet, is_positive_definite, lll_gram, short_vectors, theta_slice
from .kernel import BACKEND
from .search import IsometryResult, automorphism_count, is_isometric, verify_witness

__all__ = [
    "BACKEND",
    "IsometryResult",
    "ShortVectorSet",
    "automorphism_count",
    "brute_force_isometric",
    "is_isometric",
    "is_positive_definite",
    "lll_gram",
    "short_vectors",
    "theta_slice",
    "verify_witness",
]
