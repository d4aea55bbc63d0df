"""Exact integer/rational linear algebra and polynomial arithmetic."""

from .finite_field import factor_mod_p
from .integers import PrimeFactorization, factor_integer, is_prime
from .matrix import diagonalize_symmetric, hnf, kernel_basis, smith_normal_form
from .poly import discriminant as poly_discriminant
from .poly import resultant, sturm_real_roots

__all__ = [
    "PrimeFactorization",
    "diagonalize_symmetric",
    "factor_integer",
    "factor_mod_p",
    "hnf",
    "is_prime",
    "kernel_basis",
    "poly_discriminant",
    "resultant",
    "smith_normal_form",
    "sturm_real_roots",
]
