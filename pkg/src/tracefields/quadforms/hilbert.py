"""Hilbert symbols, Hasse invariants and rational equivalence of quadratic forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..algebra import matrix as mat
from ..algebra.integers import factor_integer, legendre, squarefree_part, valuation
from ..errors import DegenerateFormError

INF = "inf"
Place = Union[int, str]


def _square_class_int(a) -> int:
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero has no square class")
    return a.numerator * a.denominator


def hilbert_symbol(a, b, v: Place) -> int:
    """Hilbert symbol (a, b)_v for nonzero rationals a, b at a prime v or at INF."""
    a, b = _square_class_int(a), _square_class_int(b)
    if v == INF:
        return -1 if a < 0 and b < 0 else 1
    p = int(v)
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = a // p**alpha, b // p**beta
    if p == 2:
        def eps(x):
            return (x - 1) // 2 % 2

        def omega(x):
            return (x * x - 1) // 8 % 2

        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(w, p)
    return s


def hasse_invariant(diagonal: Sequence, v: Place) -> int:
    """Product over pairs i < j of (d_i, d_j)_v."""
    out = 1
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            out *= hilbert_symbol(diagonal[i], diagonal[j], v)
    return out


def support_places(diagonal: Sequence) -> list[Place]:
    primes = {2}
    for d in diagonal:
        for p in factor_integer(_square_class_int(d)).primes:
            primes.add(p)
    return sorted(primes) + [INF]


@dataclass(frozen=True)
class LocalProfile:
    dim: int
    disc_class: int
    signature: tuple[int, int]
    hasse: dict

    def hasse_at(self, v: Place) -> int:
        return self.hasse.get(v, 1)

    @property
    def places(self) -> list[Place]:
        return list(self.hasse)


def local_profile(gram: Sequence[Sequence]) -> LocalProfile:
    gram = getattr(gram, "gram", gram)
    diag = mat.diagonalize_symmetric(gram)
    if diag.degenerate or any(d == 0 for d in diag.entries):
        raise DegenerateFormError("form is degenerate")
    entries = [squarefree_part(_square_class_int(d)) for d in diag.entries]
    prod = 1
    for d in entries:
        prod *= d
    pos = sum(1 for d in entries if d > 0)
    hasse = {v: hasse_invariant(entries, v) for v in support_places(entries)}
    return LocalProfile(len(entries), squarefree_part(prod), (pos, len(entries) - pos), hasse)


def rationally_equivalent(L1, L2) -> tuple[bool, dict]:
    """Equivalence over Q: dimension, discriminant class, signature and Hasse invariants."""
    a, b = local_profile(L1), local_profile(L2)
    report = {
        "dim": (a.dim, b.dim),
        "disc_class": (a.disc_class, b.disc_class),
        "signature": (a.signature, b.signature),
        "hasse": {},
    }
    places = sorted({v for v in a.places + b.places if v != INF}) + [INF]
    for v in places:
        report["hasse"][v] = (a.hasse_at(v), b.hasse_at(v))
    ok = (
        a.dim == b.dim
        and a.disc_class == b.disc_class
        and a.signature == b.signature
        and all(x == y for x, y in report["hasse"].values())
    )
    return ok, report
