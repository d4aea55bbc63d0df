import random

import pytest

from conftest import field
from helpers import random_positive_definite, random_unimodular
from tracefields import fixtures as fx
from tracefields.algebra import matrix as mat
from tracefields.quadforms import genus_symbol, same_genus
from tracefields.quadforms.genus import jordan_pieces
from tracefields.traceforms import trace_gram


def test_diag_1_5_at_5():
    assert genus_symbol([[1, 0], [0, 5]], 5).blocks == ((0, 1, 1), (1, 1, 1))


def test_local_oracle_for_diag_1_5():
    # the unit part of 5 is 1, a square mod 5; a non-square unit flips eps
    assert genus_symbol([[2, 0], [0, 5]], 5).blocks == ((0, 1, -1), (1, 1, 1))
    assert genus_symbol([[1, 0], [0, 10]], 5).blocks == ((0, 1, 1), (1, 1, -1))


def test_unimodular_at_3():
    assert genus_symbol([[1, 0], [0, 1]], 3).blocks == ((0, 2, 1),)


def test_hyperbolic_plane_is_even_at_2():
    sym = genus_symbol([[0, 1], [1, 0]], 2)
    assert sym.completeness == "partial-at-2"
    assert [(b[0], b[1], b[3]) for b in sym.blocks] == [(0, 2, 0)]


def test_same_genus_reflexive_and_different():
    L = [[2, 1], [1, 3]]
    assert same_genus(L, L) == "same"
    assert same_genus([[1, 0], [0, 5]], [[2, 0], [0, 10]]) == "different"
    assert same_genus([[1, 0], [0, 1]], [[1, 0], [0, 2]]) == "different"


def test_pieces_reassemble_the_determinant():
    rng = random.Random(2)
    for _ in range(30):
        G = random_positive_definite(3, rng)
        for p in (2, 3, 5):
            pieces = jordan_pieces(G, p)
            d = 1
            for v, B in pieces:
                d *= mat.det(B)
            assert d == mat.det(G)


def test_odd_symbols_invariant_under_unimodular_change():
    rng = random.Random(50)
    for _ in range(50):
        n = rng.randint(2, 4)
        G = random_positive_definite(n, rng, entry=3)
        U = random_unimodular(n, rng)
        H = mat.congruence(G, U)
        for p in (3, 5, 7):
            assert genus_symbol(G, p) == genus_symbol(H, p)
        assert same_genus(G, H) != "different"


def test_spinor_triple_is_never_separated():
    forms = [trace_gram(field(c)) for c in fx.SPINOR_TRIPLE]
    for i in range(3):
        for j in range(i + 1, 3):
            assert same_genus(forms[i], forms[j]) in ("same", "undetermined-at-2")


@pytest.mark.parametrize("i, j", [(0, 1), (0, 2), (1, 3)])
def test_cubic_trace_forms_share_a_genus(i, j):
    A, B = trace_gram(field(fx.CUBICS[i])), trace_gram(field(fx.CUBICS[j]))
    assert same_genus(A, B) in ("same", "undetermined-at-2")
