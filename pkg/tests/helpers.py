"""Small independent oracles shared by the tests."""

import random
from fractions import Fraction


def _is_integral_element(F, coords):
    """Integrality via the characteristic polynomial of multiplication."""
    from sympy import Matrix

    n = F.degree
    cols = []
    for b in F.basis:
        prod = F.multiply(coords, list(b))
        cols.append(F.to_basis(prod))
    M = Matrix(n, n, lambda i, j: cols[j][i])
    return all(c.q == 1 for c in M.charpoly().all_coeffs())


def maximality_defect(F, max_elements=4000):
    """Primes p for which some element of (1/p) O, not in O, is integral.

    O is the order spanned by ``F.basis``. Primes whose brute-force search
    would exceed ``max_elements`` candidates are skipped and returned
    separately.
    """
    from itertools import product

    from tracefields.algebra import poly as P
    from tracefields.algebra.integers import factor_integer

    n = F.degree
    defects, skipped = [], []
    d = P.discriminant(list(F.min_poly)) // F.index**2
    for p, e in factor_integer(d).factors:
        if e < 2:
            continue
        if p**n - 1 > max_elements:
            skipped.append(p)
            continue
        for c in product(range(p), repeat=n):
            if not any(c):
                continue
            coords = [sum(Fraction(c[i], p) * F.basis[i][k] for i in range(n)) for k in range(n)]
            if _is_integral_element(F, coords):
                defects.append(p)
                break
    return defects, skipped


def random_unimodular(n, rng, steps=8, size=2):
    """Product of random elementary matrices and sign flips."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.8:
            c = rng.randint(-size, size)
            for row in U:
                row[j] += c * row[i]
        else:
            for row in U:
                row[i] = -row[i]
    return U


def random_positive_definite(n, rng, entry=4):
    """B^t B + I for a random integer B, a positive definite Gram matrix."""
    B = [[rng.randint(-entry, entry) for _ in range(n)] for _ in range(n)]
    return [[sum(B[k][i] * B[k][j] for k in range(n)) + (i == j) for j in range(n)] for i in range(n)]


def frac_matrix(M):
    return [[Fraction(x) for x in row] for row in M]


__all__ = ["random", "random_unimodular", "random_positive_definite", "frac_matrix",
           "maximality_defect"]
