"""Exact integer and rational matrices.

Matrices are plain row-major lists of lists holding ``int`` or
``fractions.Fraction`` entries. Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

Matrix = list[list]


def copy(M: Sequence[Sequence]) -> Matrix:
    return [list(row) for row in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = list(zip(*B))
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def vecmat(v: Sequence, A: Sequence[Sequence]) -> list:
    if not A:
        return []
    return [sum(x * A[i][j] for i, x in enumerate(v)) for j in range(len(A[0]))]


def congruence(G: Sequence[Sequence], T: Sequence[Sequence]) -> Matrix:
    """Return T^t * G * T."""
    return matmul(transpose(T), matmul(G, T))


def is_integral(M: Sequence[Sequence]) -> bool:
    return all(isinstance(x, int) or x.denominator == 1 for row in M for x in row)


def to_int(M: Sequence[Sequence]) -> Matrix:
    if not is_integral(M):
        raise ValueError("matrix has non-integral entries")
    return [[int(x) for x in row] for row in M]


def is_symmetric(M: Sequence[Sequence]) -> bool:
    n = len(M)
    return all(len(row) == n for row in M) and all(
        M[i][j] == M[j][i] for i in range(n) for j in range(i)
    )


def det(M: Sequence[Sequence]):
    """Exact determinant: fraction-free Bareiss for integers, Gaussian elimination otherwise."""
    n = len(M)
    if n == 0:
        return 1
    if is_integral(M):
        A = [[int(x) for x in row] for row in M]
        sign, prev = 1, 1
        for k in range(n - 1):
            if A[k][k] == 0:
                for i in range(k + 1, n):
                    if A[i][k]:
                        A[k], A[i] = A[i], A[k]
                        sign = -sign
                        break
                else:
                    return 0
            akk = A[k][k]
            for i in range(k + 1, n):
                aik = A[i][k]
                row_i, row_k = A[i], A[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            prev = akk
        return sign * A[n - 1][n - 1]
    A = [[Fraction(x) for x in row] for row in M]
    out = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            out = -out
        out *= A[k][k]
        inv = 1 / A[k][k]
        for i in range(k + 1, n):
            c = A[i][k] * inv
            if c:
                A[i] = [a - c * b for a, b in zip(A[i], A[k])]
    return out


def inverse(M: Sequence[Sequence]) -> Matrix:
    """Inverse over Q by Gauss-Jordan elimination."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[k], A[piv] = A[piv], A[k]
        inv = 1 / A[k][k]
        A[k] = [a * inv for a in A[k]]
        for i in range(n):
            if i != k and A[i][k]:
                c = A[i][k]
                A[i] = [a - c * b for a, b in zip(A[i], A[k])]
    return [row[n:] for row in A]


def hnf(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H = U * M``, ``U`` unimodular, pivots positive
    and the entries above each pivot reduced into ``[0, pivot)``. Zero rows
    collect at the bottom. Pivoting picks the row with the smallest nonzero
    entry in the current column.
    """
    H = [[int(x) for x in row] for row in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            rows = [i for i in range(r, m) if H[i][c]]
            if not rows:
                break
            best = min(rows, key=lambda i: abs(H[i][c]))
            if best != r:
                H[r], H[best] = H[best], H[r]
                U[r], U[best] = U[best], U[r]
            piv = H[r][c]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // piv
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            piv = H[r][c]
            for i in range(r):
                q = H[i][c] // piv
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U


def hnf_basis(M: Sequence[Sequence[int]]) -> Matrix:
    """Nonzero rows of the HNF: a basis of the row lattice."""
    H, _ = hnf(M)
    return [row for row in H if any(row)]


def kernel_basis(M: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis of the integer kernel ``{v : M v = 0}``, returned in HNF.

    The result is saturated: it extends to a basis of Z^n.
    """
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return identity(n)
    H, U = hnf(transpose(M))
    kernel = [U[i] for i in range(n) if not any(H[i])]
    return hnf_basis(kernel) if kernel else []


def rational_hnf_basis(rows: Sequence[Sequence]) -> Matrix:
    """HNF basis of the Z-module spanned by rational row vectors."""
    den = 1
    for row in rows:
        for x in row:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in row] for row in rows]
    return [[Fraction(x, den) for x in row] for row in hnf_basis(scaled)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``D = U * M * V`` with d1 | d2 | ... and U, V unimodular."""
    D = [[int(x) for x in row] for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            piv = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return D, U, V


class Diagonalization(NamedTuple):
    entries: list[Fraction]
    transform: Matrix
    degenerate: bool


def diagonalize_symmetric(G: Sequence[Sequence]) -> Diagonalization:
    """Rational congruence diagonalization: ``T^t G T`` is diagonal.

    When the remaining diagonal is entirely zero but an off-diagonal entry
    G_ij survives, the basis move e_i <- e_i + e_j creates the pivot 2*G_ij.
    """
    if not is_symmetric(G):
        raise ValueError("matrix is not symmetric")
    n = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    T = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in T:
            row[i], row[j] = row[j], row[i]

    def add(dst, src, c):
        # basis move e_dst <- e_dst + c * e_src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        for row in A:
            row[dst] += c * row[src]
        for row in T:
            row[dst] += c * row[src]

    degenerate = False
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j]), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if A[i][j]), None)
                if j is None:
                    degenerate = True
                    continue
                add(i, j, 1)
        piv = A[i][i]
        for k in range(i + 1, n):
            if A[i][k]:
                add(k, i, -A[i][k] / piv)
    entries = [A[i][i] for i in range(n)]
    return Diagonalization(entries, T, degenerate)


def kernel_mod_p(A: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> Matrix:
    """Basis of the right kernel ``{x : A x = 0}`` over F_p (entries in [0, p))."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    R = [[x % p for x in row] for row in A]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        R[r] = [x * inv % p for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(a - f * b) % p for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = -R[row_idx][fcol] % p
        basis.append(v)
    return basis


def rank_mod_p(A: Sequence[Sequence[int]], p: int) -> int:
    n = len(A[0]) if A else 0
    return n - len(kernel_mod_p(A, p, n))
