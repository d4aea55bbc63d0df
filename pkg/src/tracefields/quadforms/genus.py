"""p-adic Jordan decompositions and genus symbols of integral forms.

Symbols at odd primes are canonical. At p = 2 the Jordan constituents are
recorded without train/compartment canonicalization, so two lattices whose
2-adic data differ only in non-invariant parts compare as undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..algebra import matrix as mat
from ..algebra.integers import factor_integer, legendre


def _val(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _unit(x: Fraction, p: int) -> int:
    """An integer representing the unit part of x modulo squares and p^3."""
    v = _val(x, p)
    y = x / Fraction(p) ** v
    return y.numerator * y.denominator


def jordan_pieces(gram: Sequence[Sequence], p: int) -> list[tuple[int, list[list[Fraction]]]]:
    """Split the form over Z_(p) into 1x1 pieces (and 2x2 even pieces when p = 2).

    Returns (scale valuation, piece matrix) pairs in order of extraction.
    """
    A = [[Fraction(x) for x in row] for row in gram]
    idx = list(range(len(A)))
    pieces = []

    def entry(i, j):
        return A[i][j]

    while idx:
        v = min(_val(entry(i, j), p) for i in idx for j in idx)
        if v >= 10**9:
            raise ValueError("degenerate form")
        diag = [i for i in idx if _val(entry(i, i), p) == v]
        if not diag and p != 2:
            i, j = next((i, j) for i in idx for j in idx if i < j and _val(entry(i, j), p) == v)
            # e_i <- e_i + e_j
            A[i] = [a + b for a, b in zip(A[i], A[j])]
            for row in A:
                row[i] += row[j]
            diag = [i]
        if diag:
            i = diag[0]
            piv = A[i][i]
            for k in idx:
                if k != i and A[i][k]:
                    c = A[i][k] / piv
                    A[k] = [a - c * b for a, b in zip(A[k], A[i])]
                    for row in A:
                        row[k] -= c * row[i]
            pieces.append((v, [[piv]]))
            idx.remove(i)
            continue
        i, j = next((i, j) for i in idx for j in idx if i < j and _val(entry(i, j), p) == v)
        B = [[A[i][i], A[i][j]], [A[j][i], A[j][j]]]
        Binv = mat.inverse(B)
        for k in idx:
            if k in (i, j):
                continue
            x, y = mat.matvec(Binv, [A[i][k], A[j][k]])
            if x or y:
                A[k] = [a - x * b - y * c for a, b, c in zip(A[k], A[i], A[j])]
                for row in A:
                    row[k] -= x * row[i] + y * row[j]
        pieces.append((v, B))
        idx.remove(i)
        idx.remove(j)
    return pieces


@dataclass(frozen=True)
class GenusSymbol:
    """Local symbol at p.

    Odd p: blocks are (scale, dim, eps) with eps the Legendre symbol of the
    block determinant's unit part. p = 2: blocks are
    (scale, dim, det unit mod 8, type, oddity) with type 1 for odd and 0
    for even constituents.
    """

    p: int
    blocks: tuple[tuple[int, ...], ...]
    completeness: str  # "exact" | "partial-at-2"
    oddity: int | None = None

    @property
    def dim(self) -> int:
        return sum(b[1] for b in self.blocks)


def _invariant_oddity(gram, p=2) -> int:
    """Conway-Sloane 2-adic oddity from a rational diagonalization."""
    total = 0
    for d in mat.diagonalize_symmetric(gram).entries:
        k = _val(d, 2)
        u = _unit(d, 2) % 8
        total += u
        if k % 2 and u in (3, 5):
            total += 4
    return total % 8


def genus_symbol(L, p: int) -> GenusSymbol:
    gram = getattr(L, "gram", L)
    pieces = jordan_pieces(gram, p)
    by_scale: dict[int, list] = {}
    for v, B in pieces:
        by_scale.setdefault(v, []).append(B)
    blocks = []
    for v in sorted(by_scale):
        mats = by_scale[v]
        dim = sum(len(B) for B in mats)
        det = Fraction(1)
        for B in mats:
            det *= mat.det(B)
        unit = _unit(det, p)
        if p != 2:
            blocks.append((v, dim, legendre(unit, p)))
        else:
            odd = [B for B in mats if len(B) == 1]
            typ = 1 if odd else 0
            oddity = sum(_unit(B[0][0], 2) % 8 for B in odd) % 8
            blocks.append((v, dim, unit % 8, typ, oddity))
    if p == 2:
        return GenusSymbol(2, tuple(blocks), "partial-at-2", _invariant_oddity(gram))
    return GenusSymbol(p, tuple(blocks), "exact")


def _compare_at_2(a: GenusSymbol, b: GenusSymbol) -> str:
    if a.blocks == b.blocks:
        return "same"
    shape_a = [(blk[0], blk[1], blk[3]) for blk in a.blocks]
    shape_b = [(blk[0], blk[1], blk[3]) for blk in b.blocks]
    if shape_a != shape_b or a.oddity != b.oddity:
        return "different"
    return "undetermined-at-2"


def same_genus(L1, L2) -> str:
    """'same', 'different' or 'undetermined-at-2'."""
    from .hilbert import local_profile

    g1, g2 = getattr(L1, "gram", L1), getattr(L2, "gram", L2)
    if len(g1) != len(g2):
        return "different"
    d1, d2 = mat.det(g1), mat.det(g2)
    if d1 != d2:
        return "different"
    if local_profile(g1).signature != local_profile(g2).signature:
        return "different"
    primes = set(factor_integer(2 * d1).primes)
    verdict = "same"
    for p in sorted(primes):
        s1, s2 = genus_symbol(g1, p), genus_symbol(g2, p)
        if p != 2:
            if s1.blocks != s2.blocks:
                return "different"
        else:
            cmp = _compare_at_2(s1, s2)
            if cmp == "different":
                return "different"
            if cmp != "same":
                verdict = cmp
    return verdict
