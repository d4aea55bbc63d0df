"""Number fields given by a defining polynomial, with their maximal orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from ..algebra import finite_field as ff
from ..algebra import matrix as mat
from ..algebra import poly
from ..algebra.integers import PrimeFactorization, factor_integer, iter_primes
from ..errors import IndexObstruction, IrreducibilityUndetermined, ReducibleError
from .round2 import maximal_order, multiplication_table, multiply


def monic_model(coeffs: Sequence[int]) -> list[int]:
    """Monic integral polynomial a^(n-1) f(y/a) whose roots are a*theta, a = lc(f)."""
    f = poly.trim([int(c) for c in coeffs])
    n = len(f) - 1
    if n < 1:
        raise ValueError("need a nonconstant polynomial")
    a = f[-1]
    return [f[k] * a ** (n - 1 - k) for k in range(n)] + [1]


@dataclass(frozen=True)
class IrreducibilityCertificate:
    method: str  # "degree", "prime", "pattern", "linear"
    primes: tuple[int, ...] = ()


def _integer_roots(f: Sequence[int]) -> list[int]:
    """Integer roots of a monic integer polynomial."""
    if f[0] == 0:
        return [0]
    bound = poly.root_bound(f)
    roots = []
    fac = factor_integer(f[0])
    divisors = [1]
    for p, e in fac.factors:
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    for d in divisors:
        if d > bound:
            continue
        for r in (d, -d):
            if poly.evaluate(f, r) == 0:
                roots.append(r)
    return sorted(roots)


def certify_irreducible(
    f: Sequence[int], max_primes: int = 100, pattern_primes: int = 25
) -> IrreducibilityCertificate:
    """Prove a monic integer polynomial irreducible over Q, or raise.

    Raises ReducibleError with a certificate (repeated factor or rational
    root), or IrreducibilityUndetermined when no proof is found.
    """
    n = len(f) - 1
    if n == 1:
        return IrreducibilityCertificate("linear")
    g = poly.gcd_poly(f, poly.derivative(f))
    if len(g) > 1:
        raise ReducibleError("polynomial has a repeated factor", ("repeated-factor", g))
    roots = _integer_roots(f)
    if roots:
        raise ReducibleError(f"polynomial has the rational root {roots[0]}", ("root", roots[0]))
    if n <= 3:
        return IrreducibilityCertificate("degree")
    d = poly.discriminant(f)
    possible = set(range(1, n))
    used = []
    tried = 0
    for p in iter_primes(2):
        if d % p == 0:
            continue
        tried += 1
        degs = ff.degree_pattern(f, p)
        if len(degs) == 1:
            return IrreducibilityCertificate("prime", (p,))
        if tried <= pattern_primes:
            sums = {0}
            for k in degs:
                sums |= {s + k for s in sums}
            possible &= sums
            used.append(p)
            if not possible - {n}:
                return IrreducibilityCertificate("pattern", tuple(used))
        if tried >= max_primes:
            break
    raise IrreducibilityUndetermined(f"could not certify irreducibility of {f}")


@dataclass(frozen=True)
class PrimeSplit:
    """Splitting type of p: pairs (e, f) of ramification index and residue degree."""

    p: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.pairs)

    @property
    def is_unramified(self) -> bool:
        return all(e == 1 for e, _ in self.pairs)

    @property
    def residue_degrees(self) -> tuple[int, ...]:
        return tuple(f for _, f in self.pairs)

    def __str__(self) -> str:
        return "[" + ", ".join(f"(e={e},f={f})" for e, f in self.pairs) + "]"


@dataclass(frozen=True, eq=False)
class NumberField:
    """A number field Q(theta) with its maximal order.

    ``basis`` rows are the integral basis in power-basis coordinates of the
    monic model ``min_poly``; the first row is 1.
    """

    min_poly: tuple[int, ...]
    basis: tuple[tuple[Fraction, ...], ...]
    disc: int
    disc_factorization: PrimeFactorization
    signature: tuple[int, int]
    index: int
    input_poly: tuple[int, ...]
    label: str = ""
    certificate: IrreducibilityCertificate = field(default=IrreducibilityCertificate("degree"))

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def poly_disc(self) -> int:
        return self.disc * self.index**2

    @property
    def is_totally_real(self) -> bool:
        return self.signature[1] == 0

    @property
    def ramified_primes(self) -> list[int]:
        return self.disc_factorization.primes

    @cached_property
    def basis_inverse(self):
        return mat.inverse(self.basis)

    @cached_property
    def multiplication_table(self) -> list[list[list[int]]]:
        return multiplication_table(self.min_poly, self.basis)

    @cached_property
    def power_traces(self) -> list[int]:
        """Tr(theta^k) for k = 0 .. 2n-2."""
        return poly.power_sums(self.min_poly, 2 * self.degree - 1)

    def multiply(self, a: Sequence, b: Sequence) -> list:
        """Product of elements in power-basis coordinates."""
        return multiply(self.min_poly, a, b)

    def to_basis(self, a: Sequence) -> list:
        """Coordinates of a power-basis element in the integral basis."""
        return mat.vecmat(a, self.basis_inverse)

    def from_basis(self, c: Sequence) -> list:
        return mat.vecmat(c, self.basis)

    def element_trace(self, a: Sequence) -> Fraction:
        return sum(Fraction(x) * t for x, t in zip(a, self.power_traces))

    def __eq__(self, other):
        return isinstance(other, NumberField) and (self.min_poly, self.basis) == (other.min_poly, other.basis)

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        name = f"{self.label!r}, " if self.label else ""
        return f"NumberField({name}{list(self.min_poly)}, disc={self.disc}, sig={self.signature})"


def field_from_poly(coeffs: Sequence[int], label: str = "", **irreducibility_options) -> NumberField:
    """Build a number field from integer coefficients c0..cn (constant term first).

    Non-monic inputs are rescaled by their leading coefficient, never
    content-divided first.
    """
    input_poly = tuple(poly.trim([int(c) for c in coeffs]))
    f = monic_model(input_poly)
    cert = certify_irreducible(f, **irreducibility_options)
    d = poly.discriminant(f)
    basis, disc, index = maximal_order(f, factor_integer(d))
    r = poly.sturm_real_roots(f)
    n = len(f) - 1
    return NumberField(
        min_poly=tuple(f),
        basis=tuple(tuple(row) for row in basis),
        disc=disc,
        disc_factorization=factor_integer(disc),
        signature=(r, (n - r) // 2),
        index=index,
        input_poly=input_poly,
        label=label,
        certificate=cert,
    )


def signature(F: NumberField) -> tuple[int, int]:
    return F.signature


def splitting_type(F: NumberField, p: int, seed: int = ff.DEFAULT_SEED) -> PrimeSplit:
    """Splitting of p in O_K via Dedekind's criterion (requires p not dividing the index)."""
    if F.index % p == 0:
        raise IndexObstruction(f"{p} divides the index {F.index}")
    pairs = sorted((len(g) - 1, e) for g, e in ff.factor_mod_p(F.min_poly, p, seed))
    return PrimeSplit(p, tuple((e, f) for f, e in pairs))


def is_tame_at(F: NumberField, p: int) -> str:
    """One of 'unramified', 'tame', 'wild', 'undetermined'."""
    if F.disc % p:
        return "unramified"
    n = F.degree
    if p > n:
        return "tame"
    if F.index % p:
        split = splitting_type(F, p)
        return "wild" if any(e % p == 0 for e, _ in split.pairs) else "tame"
    if F.disc_factorization.valuation(p) > n - 1:
        return "wild"
    return "undetermined"


FUNDAMENTAL_MODES = ("quadratic-style", "strict-squarefree")


def is_fundamental_disc(d: int, mode: str = "quadratic-style") -> bool:
    """Squarefree d, or (quadratic-style) d = 4m with m squarefree and m = 2, 3 mod 4."""
    if d == 0:
        raise ValueError("0 is not a discriminant")
    if mode not in FUNDAMENTAL_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    fac = factor_integer(d)
    if all(e == 1 for _, e in fac.factors):
        return True
    if mode == "strict-squarefree" or d % 4:
        return False
    m = d // 4
    return all(e == 1 for _, e in factor_integer(m).factors) and m % 4 in (2, 3)


def trace_vector(F: NumberField) -> list[int]:
    """(Tr(b_1), ..., Tr(b_n)) over the integral basis."""
    return [int(F.element_trace(b)) for b in F.basis]


def structure_is_integral(F: NumberField) -> bool:
    try:
        multiplication_table(F.min_poly, F.basis)
    except ValueError:
        return False
    return True


__all__ = [
    "IrreducibilityCertificate",
    "NumberField",
    "PrimeSplit",
    "certify_irreducible",
    "field_from_poly",
    "is_fundamental_disc",
    "is_tame_at",
    "monic_model",
    "signature",
    "splitting_type",
    "trace_vector",
]
