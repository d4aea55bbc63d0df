"""Splitting-type spectra of number fields.

Equal spectra at unramified primes are the computable shadow of equal
Dedekind zeta functions; a prime where the (e, f) multisets differ proves
two fields are not conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.finite_field import DEFAULT_SEED
from .algebra.integers import primes_up_to
from .fields import NumberField, PrimeSplit, splitting_type
from .fields.conjugacy import SPLIT_CERTIFICATE_BOUND, split_certificate


@dataclass(frozen=True)
class SplitSpectrum:
    field_id: str
    bound: int
    entries: dict[int, PrimeSplit]
    excluded: list[tuple[int, str]] = field(default_factory=list)

    def __getitem__(self, p: int) -> PrimeSplit:
        return self.entries[p]

    def __contains__(self, p: int) -> bool:
        return p in self.entries


def splitting_spectrum(F: NumberField, B: int, seed: int = DEFAULT_SEED) -> SplitSpectrum:
    """Splitting types at every prime p <= B not dividing the index of F's model."""
    entries, excluded = {}, []
    for p in primes_up_to(B):
        if F.index % p == 0:
            excluded.append((p, f"divides the index {F.index}"))
            continue
        entries[p] = splitting_type(F, p, seed)
    return SplitSpectrum(F.label or str(list(F.input_poly)), B, entries, excluded)


@dataclass(frozen=True)
class SpectrumComparison:
    status: str  # "consistent" | "distinguished"
    bound: int
    prime: int | None = None
    types: tuple[PrimeSplit, PrimeSplit] | None = None
    compared: int = 0

    @property
    def consistent(self) -> bool:
        return self.status == "consistent"


def compare_spectra(F: NumberField, L: NumberField, B: int, seed: int = DEFAULT_SEED) -> SpectrumComparison:
    """First prime p <= B, included in both spectra, where the (e, f) multisets differ."""
    if F.degree != L.degree:
        raise ValueError("spectra are compared for fields of equal degree")
    compared = 0
    for p in primes_up_to(B):
        if F.index % p == 0 or L.index % p == 0:
            continue
        a, b = splitting_type(F, p, seed), splitting_type(L, p, seed)
        compared += 1
        if a.pairs != b.pairs:
            return SpectrumComparison("distinguished", B, p, (a, b), compared)
    return SpectrumComparison("consistent", B, compared=compared)


def non_conjugacy_certificate(F: NumberField, L: NumberField, bound: int = SPLIT_CERTIFICATE_BOUND):
    """(p, split in F, split in L) at the smallest separating prime, or None."""
    if F.degree != L.degree:
        raise ValueError("certificates are sought for fields of equal degree")
    return split_certificate(F, L, bound)


__all__ = [
    "SplitSpectrum",
    "SpectrumComparison",
    "compare_spectra",
    "non_conjugacy_certificate",
    "splitting_spectrum",
]
