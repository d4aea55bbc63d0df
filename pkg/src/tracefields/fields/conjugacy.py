"""Deciding whether two number fields are conjugate (isomorphic).

Negative answers come from cheap invariants: degree, discriminant,
signature and splitting types. Positive answers come from an explicit
root of one defining polynomial inside the other field, found p-adically
and verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from ..algebra import finite_field as ff
from ..algebra import poly
from ..algebra.integers import primes_up_to
from ..errors import IndexObstruction
from .field import NumberField, splitting_type
from .round2 import reduce_mod

SPLIT_CERTIFICATE_BOUND = 10**4
LIFT_PRIME_START = 50
LIFT_PRIME_LIMIT = 2 * 10**5
MAX_PRECISION_BITS = 4096
MAX_PERMUTATIONS = 10**5


@dataclass(frozen=True)
class ConjugacyResult:
    status: str  # "yes" | "no" | "undetermined"
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "yes"


def _hensel_root(f, r, p, N):
    """Lift a simple root r of f mod p to a root mod p^N (Newton iteration)."""
    df = poly.derivative(f)
    mod = p
    while mod < p**N:
        mod = min(mod * mod, p**N)
        fr = poly.evaluate(f, r) % mod
        dfr = poly.evaluate(df, r) % mod
        r = (r - fr * pow(dfr, -1, mod)) % mod
    return r


def _interpolate_mod(xs, ys, m):
    """Coefficients (constant first) of the polynomial of degree < n through the points, mod m."""
    n = len(xs)
    coeffs = [0] * n
    for i in range(n):
        num = [1]
        den = 1
        for j in range(n):
            if j != i:
                num = poly.mul(num, [-xs[j], 1])
                den = den * (xs[i] - xs[j]) % m
        c = ys[i] * pow(den, -1, m) % m
        for k, a in enumerate(num):
            coeffs[k] = (coeffs[k] + c * a) % m
    return coeffs


def _symmetric(a, m):
    a %= m
    return a - m if 2 * a > m else a


def _splits_completely(f, p) -> bool:
    x = [0, 1]
    return ff.sub(ff.powmod(x, p, ff.reduce(f, p), p), x, p) == []


def find_root_in(F: NumberField, g, *, prime_limit: int = LIFT_PRIME_LIMIT,
                 max_bits: int = MAX_PRECISION_BITS, max_permutations: int = MAX_PERMUTATIONS):
    """Search for a root of the monic integer polynomial g in F.

    Returns (power-basis coordinates, reason). Coordinates are None when no
    root was found within the budget.
    """
    f = list(F.min_poly)
    n = F.degree
    if len(g) - 1 != n:
        return None, "degree mismatch"
    bad = poly.discriminant(f) * poly.discriminant(g)
    p = None
    for q in primes_up_to(prime_limit):
        if q > LIFT_PRIME_START and bad % q and _splits_completely(f, q):
            p = q
            break
    if p is None:
        return None, f"no completely split prime below {prime_limit}"
    if not _splits_completely(g, p):
        return None, f"{p} splits f completely but not g"
    rf, rg = ff.roots_mod_p(f, p), ff.roots_mod_p(list(g), p)
    if factorial(n) > max_permutations:
        return None, f"{factorial(n)} root matchings exceed the search budget"
    N = 1
    while p**N < 2**128:
        N += 1
    while p.bit_length() * N <= max_bits:
        m = p**N
        beta = [_hensel_root(f, r, p, N) for r in rf]
        gamma = [_hensel_root(list(g), r, p, N) for r in rg]
        height = 1 << (m.bit_length() // 2 - 4)
        for perm in permutations(gamma):
            h = _interpolate_mod(beta, perm, m)
            c = [_symmetric(F.index * a, m) for a in h]
            if max(abs(x) for x in c) > height:
                continue
            alpha = [Fraction(x, F.index) for x in c]
            if _is_root(f, g, alpha):
                return alpha, f"lifted at p={p} to precision p^{N}"
        N *= 2
    return None, f"precision budget of {max_bits} bits exhausted at p={p}"


def _is_root(f, g, alpha) -> bool:
    value = [Fraction(0)] * (len(f) - 1)
    for c in reversed(g):
        value = reduce_mod(f, poly.mul(value, alpha) or [0])
        value[0] += c
    return not any(value)


def are_conjugate(F: NumberField, L: NumberField, split_bound: int = SPLIT_CERTIFICATE_BOUND,
                  **lift_options) -> ConjugacyResult:
    """Decide F = L up to isomorphism.

    A ``yes`` carries the power-basis coordinates (in F) of a root of
    L's defining polynomial; a ``no`` carries a separating certificate.
    """
    if F.degree != L.degree:
        return ConjugacyResult("no", certificate=("degree", F.degree, L.degree))
    if F.disc != L.disc:
        return ConjugacyResult("no", certificate=("disc", F.disc, L.disc))
    if F.signature != L.signature:
        return ConjugacyResult("no", certificate=("signature", F.signature, L.signature))
    n = F.degree
    if F.min_poly == L.min_poly:
        theta = (Fraction(-F.min_poly[0]),) if n == 1 else tuple(Fraction(int(i == 1)) for i in range(n))
        return ConjugacyResult("yes", witness=theta, reason="identical defining polynomials")
    cert = split_certificate(F, L, split_bound)
    if cert is not None:
        return ConjugacyResult("no", certificate=("splitting",) + cert)
    alpha, reason = find_root_in(F, list(L.min_poly), **lift_options)
    if alpha is None:
        return ConjugacyResult("undetermined", reason=reason)
    return ConjugacyResult("yes", witness=tuple(alpha), reason=reason)


def split_certificate(F: NumberField, L: NumberField, bound: int, start: int = 2):
    """Smallest prime p <= bound (not dividing either index) where splitting types differ."""
    for p in primes_up_to(bound):
        if p < start or F.index % p == 0 or L.index % p == 0:
            continue
        try:
            a, b = splitting_type(F, p), splitting_type(L, p)
        except IndexObstruction:  # pragma: no cover - guarded above
            continue
        if a.pairs != b.pairs:
            return p, a, b
    return None


__all__ = ["ConjugacyResult", "are_conjugate", "find_root_in", "split_certificate"]
