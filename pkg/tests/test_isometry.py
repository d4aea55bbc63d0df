import itertools
import math
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from conftest import field
from helpers import random_positive_definite, random_unimodular
from tracefields import fixtures as fx
from tracefields.algebra import matrix as mat
from tracefields.errors import NotPositiveDefinite, SearchEffortExceeded
from tracefields.isometry import (
    automorphism_count,
    brute_force_isometric,
    is_isometric,
    lll_gram,
    short_vectors,
    theta_slice,
    verify_witness,
)
from tracefields.isometry import _search_py, kernel
from tracefields.isometry.search import _run
from tracefields.traceforms import gram_mod, trace_gram, trace_zero_gram

A2 = [[2, 1], [1, 2]]
A2_ALT = [[2, -1], [-1, 2]]


def box_vectors(G, bound):
    """Every nonzero x with x^t G x <= bound, by scanning a box.

    |x_i| <= sqrt(bound * (G^-1)_ii) for any such x.
    """
    n = len(G)
    inv = mat.inverse(G)
    radius = [math.isqrt(int(bound * inv[i][i])) + 1 for i in range(n)]
    out = {}
    for x in itertools.product(*(range(-r, r + 1) for r in radius)):
        if any(x):
            nx = sum(x[i] * G[i][j] * x[j] for i in range(n) for j in range(n))
            if nx <= bound:
                out[x] = nx
    return out


def test_a2_pair():
    r = is_isometric(A2, A2_ALT)
    assert r.isometric
    assert verify_witness(A2, A2_ALT, r.witness)


def test_identity_witness_for_equal_grams():
    assert is_isometric(A2, A2).witness == ((1, 0), (0, 1))


def test_separators():
    assert is_isometric([[1, 0], [0, 1]], [[1, 0], [0, 2]]).separator == ("det", 1, 2)
    r = is_isometric([[1, 0], [0, 3]], [[2, 1], [1, 2]])
    assert not r and r.separator[0] in ("gram-mod-2-zero", "minimum", "theta")
    assert is_isometric([[1, 0], [0, 1]], [[1]]).separator == ("dim", 2, 1)


def test_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        is_isometric([[1, 2], [2, 1]], [[1, 0], [0, 1]])


def test_short_vectors_of_a2():
    sv = short_vectors(A2, 2)
    assert sv.minimum == 2 and len(sv) == 3
    assert theta_slice(A2, 6) == [0, 6, 0, 0, 0, 6]


def test_short_vectors_against_box_scan():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        G = random_positive_definite(n, rng, entry=3)
        bound = rng.randint(1, 30)
        expected = box_vectors(G, bound)
        got = {}
        for v, nv in short_vectors(G, bound).vectors:
            got[v] = nv
            got[tuple(-c for c in v)] = nv
        assert got == expected


def test_lll_is_a_congruence():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(2, 5)
        G = random_positive_definite(n, rng)
        T, R = lll_gram(G)
        assert abs(mat.det(T)) == 1
        assert mat.congruence(G, T) == R
        assert R[0][0] <= min(G[i][i] for i in range(n))


@pytest.mark.parametrize("G, order", [
    ([[1, 0], [0, 1]], 8),
    (A2, 12),
    ([[3, 1], [1, 4]], 2),
    ([[1, 0], [0, 2]], 4),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 48),
    ([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]], 1152),
])
def test_automorphism_counts(G, order):
    assert automorphism_count(G) == order


def brute_automorphisms(G, H=2):
    n = len(G)
    count = 0
    for entries in itertools.product(range(-H, H + 1), repeat=n * n):
        U = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if mat.congruence(G, U) == G:
            count += 1
    return count


@pytest.mark.parametrize("G", [[[1, 0], [0, 1]], A2, [[3, 1], [1, 4]], [[2, 1], [1, 5]]])
def test_automorphism_count_matches_enumeration(G):
    assert automorphism_count(G) == brute_automorphisms(G)


def _pair_pool(rng):
    pool = {}
    while sum(len(v) for v in pool.values()) < 400:
        n = rng.randint(2, 3)
        G = random_positive_definite(n, rng, entry=2)
        pool.setdefault((n, mat.det(G)), []).append(G)
    return [g for g in pool.values() if len(g) > 1]


def test_against_brute_force_on_300_pairs():
    rng = random.Random(300)
    groups = _pair_pool(rng)
    H = 4
    checked = agreements = 0
    while checked < 300:
        if rng.random() < 0.5:
            G1, G2 = rng.sample(rng.choice(groups), 2)
        else:
            n = rng.randint(2, 3)
            G1 = random_positive_definite(n, rng, entry=2)
            U = random_unimodular(n, rng, steps=3, size=1)
            if max(abs(x) for row in U for x in row) > H:
                continue
            G2 = mat.congruence(G1, U)
        fast = is_isometric(G1, G2)
        slow, U = brute_force_isometric(G1, G2, H)
        if fast.isometric:
            assert verify_witness(G1, G2, fast.witness)
        else:
            assert not slow, (G1, G2, U)
        if slow:
            assert fast.isometric
        agreements += fast.isometric == slow
        checked += 1
    # a height-4 box holds an isometry for almost every isometric pair here
    assert agreements >= 290


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(2, 5))
def test_witness_soundness(seed, n):
    rng = random.Random(seed)
    G = random_positive_definite(n, rng, entry=3)
    U = random_unimodular(n, rng)
    H = mat.congruence(G, U)
    r = is_isometric(G, H)
    assert r.isometric
    assert verify_witness(G, H, r.witness)


@pytest.mark.skipif(kernel.BACKEND != "cython", reason="compiled kernel not built")
def test_kernels_agree():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 4)
        G = random_positive_definite(n, rng, entry=2)
        _, R = lll_gram(G)
        bound = max(R[i][i] for i in range(n))
        vecs = short_vectors(R, bound).vectors
        saved = kernel.search
        try:
            compiled = _run(R, R, vecs, True, 10**7)
            kernel.search = _search_py.search
            fallback = _run(R, R, vecs, True, 10**7)
        finally:
            kernel.search = saved
        assert compiled == fallback


def test_large_entries_use_the_fallback():
    big = 10**19
    G1 = [[big, 0], [0, big + 1]]
    U = [[1, 0], [0, -1]]
    r = is_isometric(G1, mat.congruence(G1, U))
    assert r.isometric and verify_witness(G1, mat.congruence(G1, U), r.witness)


def test_node_cap_is_reported():
    E8ish = [[2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(6)] for i in range(6)]
    with pytest.raises(SearchEffortExceeded):
        automorphism_count(E8ish, node_cap=100)


def test_octic_forms_are_indefinite_and_split_mod_2():
    F, L = field(fx.OCTIC_F), field(fx.OCTIC_L)
    MF, ML = trace_gram(F, fx.OCTIC_BASIS_F), trace_gram(L, fx.OCTIC_BASIS_L)
    assert (gram_mod(MF, 2)[1], gram_mod(ML, 2)[1]) == (False, True)
    with pytest.raises(NotPositiveDefinite):
        is_isometric(MF, ML)


def test_spinor_triple_trace_zero_forms_differ():
    forms = [trace_zero_gram(field(c)) for c in fx.SPINOR_TRIPLE]
    for a, b in itertools.combinations(forms, 2):
        r = is_isometric(a, b)
        assert not r and r.separator[0] in ("minimum", "theta", "exhaustive-search")


def test_environment_forces_the_fallback():
    env = dict(os.environ, TRACEFIELDS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from tracefields.isometry import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
