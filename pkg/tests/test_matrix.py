import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from tracefields.algebra import matrix as mat

small = st.integers(min_value=-20, max_value=20)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_hnf_small_example():
    # unique reduced form: pivots 1 and 2, entry above the second pivot in [0, 2)
    H, U = mat.hnf([[2, 4], [1, 3]])
    assert H == [[1, 1], [0, 2]]
    assert mat.matmul(U, [[2, 4], [1, 3]]) == H
    assert abs(mat.det(U)) == 1


def _is_reduced_hnf(H):
    last = -1
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        j = nz[0]
        if j <= last or row[j] <= 0:
            return False
        last = j
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        j, p = nz[0], row[nz[0]]
        if any(not 0 <= H[k][j] < p for k in range(i)):
            return False
    return True


@settings(max_examples=500)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_hnf_reconstruction(M):
    H, U = mat.hnf(M)
    assert mat.matmul(U, M) == H
    assert abs(mat.det(U)) == 1
    assert _is_reduced_hnf(H)


@settings(max_examples=500)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_snf_reconstruction(M):
    D, U, V = mat.smith_normal_form(M)
    assert mat.matmul(mat.matmul(U, M), V) == D
    assert abs(mat.det(U)) == 1 and abs(mat.det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_snf_agrees_with_sympy(M):
    D, _, _ = mat.smith_normal_form(M)
    ours = sorted(abs(D[i][i]) for i in range(len(M)))
    S = sympy_snf(Matrix(M))
    theirs = sorted(abs(int(S[i, i])) for i in range(len(M)))
    assert ours == theirs


def test_snf_example():
    D, _, _ = mat.smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(M):
    assert mat.det(M) == Matrix(M).det()


def test_inverse_round_trip():
    M = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    inv = mat.inverse(M)
    assert mat.matmul(M, inv) == mat.identity(3)
    assert inv[0][0] == Fraction(11, 18)


def test_kernel_basis():
    assert mat.kernel_basis([[2, 1]]) == [[1, -2]]
    K = mat.kernel_basis([[1, 2, 3], [4, 5, 6]])
    assert len(K) == 1 and mat.matvec([[1, 2, 3], [4, 5, 6]], K[0]) == [0, 0]


@settings(max_examples=200)
@given(st.integers(1, 3).flatmap(lambda r: matrices(r, 4)))
def test_kernel_is_saturated(M):
    K = mat.kernel_basis(M)
    for v in K:
        assert mat.matvec(M, v) == [0] * len(M)
    rank = len(mat.hnf_basis(M))
    assert len(K) == 4 - rank
    if K:
        D, _, _ = mat.smith_normal_form(K)
        assert all(D[i][i] == 1 for i in range(len(K)))


def test_diagonalize_hyperbolic_plane():
    d = mat.diagonalize_symmetric([[0, 1], [1, 0]])
    assert d.entries == [2, Fraction(-1, 2)]


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_diagonalization_is_a_congruence(B):
    n = len(B)
    G = [[B[i][j] + B[j][i] for j in range(n)] for i in range(n)]
    d = mat.diagonalize_symmetric(G)
    C = mat.congruence(G, d.transform)
    assert all(C[i][j] == (d.entries[i] if i == j else 0) for i in range(n) for j in range(n))
    assert mat.det(d.transform) != 0


def test_kernel_mod_p():
    K = mat.kernel_mod_p([[1, 1, 0], [0, 1, 1]], 2, 3)
    assert K == [[1, 1, 1]]
    rng = random.Random(3)
    for _ in range(50):
        A = [[rng.randrange(5) for _ in range(4)] for _ in range(3)]
        for v in mat.kernel_mod_p(A, 5, 4):
            assert all(x % 5 == 0 for x in mat.matvec(A, v))
        assert mat.rank_mod_p(A, 5) + len(mat.kernel_mod_p(A, 5, 4)) == 4


def test_congruence_definition():
    G = [[2, 1], [1, 3]]
    U = [[1, 1], [0, 1]]
    assert mat.congruence(G, U) == [[2, 3], [3, 7]]


@pytest.mark.parametrize("M", [[[1, 2], [2, 1]], [[0, 0], [0, 0]]])
def test_symmetry_flag(M):
    assert mat.is_symmetric(M)
