"""Maximal orders by the Round-2 algorithm (Pohst-Zassenhaus).

Orders are carried as bases of row vectors in power-basis coordinates.
Starting from Z[theta], the order is enlarged one prime at a time: at p
the p-radical is the kernel of a power of Frobenius on O/pO, and its ring
of multipliers is the next order. When the multipliers give nothing new
the order is p-maximal.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from ..algebra import matrix as mat
from ..algebra import poly
from ..algebra.integers import PrimeFactorization, factor_integer


def reduce_mod(f: Sequence[int], g: Sequence) -> list:
    """Remainder of g modulo the monic polynomial f, padded to length deg f."""
    n = len(f) - 1
    r = list(g)
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            for j in range(n + 1):
                r[k - n + j] -= c * f[j]
    r = r[:n]
    return r + [0] * (n - len(r))


def multiply(f: Sequence[int], a: Sequence, b: Sequence) -> list:
    """Product of two elements given in power-basis coordinates."""
    return reduce_mod(f, poly.mul(a, b) or [0])


def multiplication_table(f: Sequence[int], W: Sequence[Sequence]) -> list[list[list[int]]]:
    """Structure constants: table[i][j] = coordinates of w_i * w_j in the basis W.

    Raises ValueError if W is not closed under multiplication.
    """
    n = len(W)
    Winv = mat.inverse(W)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            coords = mat.vecmat(multiply(f, W[i], W[j]), Winv)
            if any(Fraction(c).denominator != 1 for c in coords):
                raise ValueError("basis is not closed under multiplication")
            table[i][j] = table[j][i] = [int(c) for c in coords]
    return table


def _mul_coords(a, b, table, p):
    n = len(a)
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        row = table[i]
        for j, bj in enumerate(b):
            if bj:
                c = ai * bj
                for k, t in enumerate(row[j]):
                    if t:
                        out[k] += c * t
    return [x % p for x in out]


def _pow_coords(a, e, table, p, one):
    result = list(one)
    base = [x % p for x in a]
    while e:
        if e & 1:
            result = _mul_coords(result, base, table, p)
        e >>= 1
        if e:
            base = _mul_coords(base, base, table, p)
    return result


def p_radical(table, p: int, one: Sequence[int]) -> list[list[int]]:
    """HNF basis (coordinates in the order) of the p-radical of the order."""
    n = len(table)
    q = p
    while q < n:
        q *= p
    images = [_pow_coords([int(i == k) for k in range(n)], q, table, p, one) for i in range(n)]
    kernel = mat.kernel_mod_p(mat.transpose(images), p, n)
    gens = kernel + [[p * int(i == k) for k in range(n)] for i in range(n)]
    return mat.hnf_basis(gens)


def ring_of_multipliers(table, radical, p: int) -> list[list[int]]:
    """HNF basis of U = {x in O : x I subset p I}; the enlarged order is U / p."""
    n = len(table)
    Iinv = mat.inverse(radical)
    rows = []
    for i in range(n):
        row = []
        for beta in radical:
            prod = [0] * n
            for k, bk in enumerate(beta):
                if bk:
                    for m, t in enumerate(table[i][k]):
                        prod[m] += bk * t
            coords = mat.vecmat(prod, Iinv)
            row += [int(c) % p for c in coords]
        rows.append(row)
    kernel = mat.kernel_mod_p(mat.transpose(rows), p, n)
    gens = kernel + [[p * int(i == k) for k in range(n)] for i in range(n)]
    return mat.hnf_basis(gens)


def canonical_basis(W: Sequence[Sequence]) -> list[list[Fraction]]:
    """Lower-triangular HNF of a full-rank rational module: row k has leading term theta^k."""
    den = lcm(*(Fraction(x).denominator for row in W for x in row))
    Z = [[int(Fraction(x) * den) for x in reversed(row)] for row in W]
    H = mat.hnf_basis(Z)
    return [[Fraction(x, den) for x in reversed(h)] for h in reversed(H)]


def p_maximal(f: Sequence[int], W: Sequence[Sequence], p: int) -> list[list[Fraction]]:
    """Enlarge the order with basis W until it is p-maximal."""
    n = len(f) - 1
    W = [list(row) for row in W]
    while True:
        table = multiplication_table(f, W)
        one = [int(c) for c in mat.vecmat([1] + [0] * (n - 1), mat.inverse(W))]
        radical = p_radical(table, p, one)
        U = ring_of_multipliers(table, radical, p)
        if mat.det(U) == p**n:
            return W
        new = mat.matmul([[Fraction(x, p) for x in row] for row in U], W)
        W = canonical_basis(new)


def maximal_order(
    f: Sequence[int], disc_factorization: PrimeFactorization | None = None
) -> tuple[list[list[Fraction]], int, int]:
    """Integral basis, field discriminant and index [O_K : Z[theta]] for monic irreducible f."""
    n = len(f) - 1
    if f[-1] != 1:
        raise ValueError("maximal_order needs a monic polynomial")
    d = poly.discriminant(f)
    fac = disc_factorization or factor_integer(d)
    W: list[list] = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for p, e in fac.factors:
        if e >= 2:
            W = p_maximal(f, W, p)
    W = canonical_basis(W)
    inv_index = abs(mat.det(W))
    index = int(1 / inv_index)
    if Fraction(1, index) != inv_index or d % (index * index):
        raise ArithmeticError("inconsistent index")
    return W, d // (index * index), index
