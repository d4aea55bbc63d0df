"""Exact Fincke-Pohst enumeration, theta slices and Gram-matrix LLL reduction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Sequence

from ..algebra import matrix as mat
from ..errors import NotPositiveDefinite


def _gram(L) -> list[list[int]]:
    return [list(r) for r in getattr(L, "gram", L)]


def is_positive_definite(G: Sequence[Sequence[int]]) -> bool:
    """Leading principal minors all positive."""
    n = len(G)
    return all(mat.det([row[:k] for row in G[:k]]) > 0 for k in range(1, n + 1))


def require_positive_definite(G) -> None:
    if not is_positive_definite(G):
        raise NotPositiveDefinite("Gram matrix is not positive definite")


def quadratic_coefficients(G: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Coefficients q with Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(G)
    q = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _integer_window(center: Fraction, radius_sq: Fraction) -> tuple[int, int]:
    """All integers x with (x + center)^2 <= radius_sq, as an inclusive range."""
    s = isqrt(radius_sq.numerator * radius_sq.denominator) // radius_sq.denominator
    hi = floor(-center) + s + 1
    while hi + center > 0 and (hi + center) ** 2 > radius_sq:
        hi -= 1
    if (hi + center) ** 2 > radius_sq:
        return 1, 0
    lo = -floor(center) - s - 1
    while lo + center < 0 and (lo + center) ** 2 > radius_sq:
        lo += 1
    return lo, hi


@dataclass(frozen=True)
class ShortVectorSet:
    """Nonzero vectors of norm at most ``bound``, one per +/- pair.

    Each representative has its first nonzero coordinate positive. Vectors
    are sorted by (norm, coordinates).
    """

    bound: int
    vectors: tuple[tuple[tuple[int, ...], int], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def with_norm(self, m: int) -> list[tuple[int, ...]]:
        return [v for v, nv in self.vectors if nv == m]

    @property
    def minimum(self) -> int | None:
        return self.vectors[0][1] if self.vectors else None


def short_vectors(L, bound: int) -> ShortVectorSet:
    G = _gram(L)
    require_positive_definite(G)
    n = len(G)
    bound = int(bound)
    if bound <= 0:
        return ShortVectorSet(bound, ())
    q = quadratic_coefficients(G)
    x = [0] * n
    found = []

    def descend(i: int, remaining: Fraction):
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        lo, hi = _integer_window(center, remaining / q[i][i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            rest = remaining - q[i][i] * (xi + center) ** 2
            if i == 0:
                found.append(tuple(x))
            else:
                descend(i - 1, rest)
        x[i] = 0

    descend(n - 1, Fraction(bound))
    out = []
    for v in found:
        lead = next((c for c in v if c), 0)
        if lead > 0:
            out.append((v, _norm(G, v)))
    out.sort(key=lambda t: (t[1], t[0]))
    return ShortVectorSet(bound, tuple(out))


def _norm(G, v) -> int:
    return sum(v[i] * G[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def theta_slice(L, B: int, vectors: ShortVectorSet | None = None) -> list[int]:
    """Representation numbers r(1), ..., r(B), counting both signs."""
    sv = vectors if vectors is not None and vectors.bound >= B else short_vectors(L, B)
    r = [0] * (B + 1)
    for _, nv in sv.vectors:
        if nv <= B:
            r[nv] += 2
    return r[1:]


def lll_gram(G: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)):
    """LLL-reduce a positive definite Gram matrix.

    Returns (T, R) with R = T^t G T and T unimodular (columns are the new
    basis in old coordinates).
    """
    n = len(G)
    g = [list(map(int, row)) for row in G]
    T = mat.identity(n)

    def gram_schmidt():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(g[i][j]) - sum((mu[j][l] * mu[i][l] * Bn[l] for l in range(j)), Fraction(0))
                mu[i][j] = s / Bn[j]
            Bn[i] = g[i][i] - sum((mu[i][l] ** 2 * Bn[l] for l in range(i)), Fraction(0))
        return mu, Bn

    def add_multiple(k, j, r):  # b_k -= r b_j
        for row in T:
            row[k] -= r * row[j]
        g[k] = [a - r * b for a, b in zip(g[k], g[j])]
        for row in g:
            row[k] -= r * row[j]

    def swap(k):
        for row in T:
            row[k], row[k - 1] = row[k - 1], row[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]

    k = 1
    while k < n:
        mu, Bn = gram_schmidt()
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                add_multiple(k, j, r)
                mu, Bn = gram_schmidt()
        if Bn[k] < (delta - mu[k][k - 1] ** 2) * Bn[k - 1]:
            swap(k)
            k = max(k - 1, 1)
        else:
            k += 1
    return T, g
