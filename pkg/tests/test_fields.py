import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import field
from helpers import maximality_defect
from tracefields import fixtures as fx
from tracefields.algebra import poly
from tracefields.errors import IndexObstruction, IrreducibilityUndetermined, ReducibleError
from tracefields.fields import (
    are_conjugate,
    field_from_poly,
    is_fundamental_disc,
    is_tame_at,
    monic_model,
    splitting_type,
)
from tracefields.fields.conjugacy import find_root_in
from tracefields.fields.round2 import maximal_order, multiplication_table


def test_octic_discriminants_and_indices():
    F, L = field(fx.OCTIC_F), field(fx.OCTIC_L)
    assert F.disc == L.disc == fx.OCTIC_DISC
    assert F.index == 2**7 and L.index == 2**21
    assert F.signature == L.signature == (0, 4)


def test_octic_canonical_bases_equal_the_pinned_ones():
    assert [list(r) for r in field(fx.OCTIC_F).basis] == fx.OCTIC_BASIS_F
    assert [list(r) for r in field(fx.OCTIC_L).basis] == fx.OCTIC_BASIS_L


@pytest.mark.parametrize("coeffs", fx.CUBICS)
def test_cubic_fields(coeffs):
    F = field(coeffs)
    assert (F.disc, F.signature, F.index) == (-3299, (1, 1), 1)


@pytest.mark.parametrize("group, disc, sig", [
    (fx.QUARTICS, 7537, (0, 2)),
    (fx.QUINTICS, 34129, (1, 2)),
    ([fx.SEPTIC_F, fx.SEPTIC_L], 2741**2, (3, 2)),
    (fx.SPINOR_TRIPLE, 151717, (4, 0)),
])
def test_reference_groups(group, disc, sig):
    for c in group:
        F = field(c)
        assert F.disc == disc and F.signature == sig


def test_quartic_printed_alongside_has_a_different_discriminant():
    assert field(fx.QUARTIC_MISPRINT).disc == fx.QUARTIC_MISPRINT_DISC


def test_spinor_polynomial_as_printed_is_not_totally_real():
    F = field(fx.SPINOR_MISPRINT)
    assert F.signature == (2, 1)
    assert F.disc == -(2**5) * 3**2 * 37579


def test_rescaled_monic_models():
    assert monic_model([1, 0, -10, -1, 19]) == [6859, 0, -190, -1, 1]
    assert [field(c).index for c in fx.SPINOR_TRIPLE] == [6859, 4096, 4913]


def test_quadratic_fields():
    F = field([-5, 0, 1])
    assert F.disc == 5 and F.index == 2
    assert [list(r) for r in F.basis] == [[1, 0], [Fraction(1, 2), Fraction(1, 2)]]
    assert field([1, 0, 1]).disc == -4


def test_reducible_and_undetermined_inputs():
    with pytest.raises(ReducibleError):
        field_from_poly([-1, 0, 1])
    with pytest.raises(ReducibleError):
        field_from_poly([1, 2, 1])
    # (x^2+1)(x^2+4): no rational root, and no factorization over Q is attempted
    with pytest.raises(IrreducibilityUndetermined):
        field_from_poly([4, 0, 5, 0, 1])


def test_swinnerton_dyer_needs_more_than_degree_patterns():
    # x^4 - 10x^2 + 1 is irreducible but reducible mod every prime
    with pytest.raises(IrreducibilityUndetermined):
        field_from_poly([1, 0, -10, 0, 1], max_primes=30)


def random_irreducible(rng, n):
    while True:
        f = [rng.randint(-6, 6) for _ in range(n)] + [1]
        try:
            return field_from_poly(f)
        except (ReducibleError, IrreducibilityUndetermined):
            continue


def test_basis_elements_are_integral():
    from helpers import _is_integral_element

    rng = random.Random(3)
    for _ in range(10):
        F = random_irreducible(rng, rng.randint(2, 5))
        for b in F.basis:
            assert _is_integral_element(F, list(b))


def test_computed_orders_are_maximal_by_brute_force():
    rng = random.Random(7)
    checked = 0
    for _ in range(25):
        F = random_irreducible(rng, rng.randint(2, 4))
        defects, skipped = maximality_defect(F)
        assert defects == []
        checked += not skipped
    assert checked >= 15


def test_index_three_example_by_dedekind():
    # x^4 - 4x^3 - x^2 + x - 6 = x (x-1)^2 (x+1) mod 3 and Dedekind's test fails at x - 1,
    # so 3 divides the index and the field discriminant is poly_disc / 9
    F = field([-6, 1, -1, -4, 1])
    assert poly.discriminant([-6, 1, -1, -4, 1]) == -371583
    assert (F.index, F.disc) == (3, -41287)
    assert maximality_defect(F) == ([], [])


@settings(max_examples=60)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_poly_disc_is_index_squared_times_field_disc(n, seed):
    F = random_irreducible(random.Random(seed), n)
    assert poly.discriminant(list(F.min_poly)) == F.index**2 * F.disc
    assert F.basis[0] == tuple(Fraction(int(i == 0)) for i in range(n))
    multiplication_table(F.min_poly, F.basis)  # closed under multiplication


def test_stickelberger_sign():
    rng = random.Random(5)
    for _ in range(30):
        F = random_irreducible(rng, rng.randint(2, 6))
        assert (F.disc > 0) == (F.signature[1] % 2 == 0)
        assert F.disc % 4 in (0, 1)


def test_maximal_order_accepts_a_precomputed_factorization():
    from tracefields.algebra.integers import factor_integer

    f = [15, 0, 0, 0, 0, 0, 0, 0, 1]
    _, disc, index = maximal_order(f, factor_integer(poly.discriminant(f)))
    assert (disc, index) == (fx.OCTIC_DISC, 128)


def test_splitting_types_gaussian_integers():
    F = field([1, 0, 1])
    assert splitting_type(F, 5).pairs == ((1, 1), (1, 1))
    assert splitting_type(F, 3).pairs == ((1, 2),)
    assert splitting_type(F, 2).pairs == ((2, 1),)


def test_splitting_type_refuses_index_primes():
    with pytest.raises(IndexObstruction):
        splitting_type(field([-5, 0, 1]), 2)


def test_septic_splitting_at_2741():
    F, L = field(fx.SEPTIC_F), field(fx.SEPTIC_L)
    assert splitting_type(F, 2741).pairs == fx.SEPTIC_SPLIT_F
    assert splitting_type(L, 2741).pairs == fx.SEPTIC_SPLIT_L
    # the residue degrees of the unramified parts, read as abbreviated tuples
    assert sorted(f for _, f in fx.SEPTIC_SPLIT_F) == [1, 1, 1, 2]
    assert sorted(f for _, f in fx.SEPTIC_SPLIT_L) == [1, 1, 1, 2]


def test_tameness():
    assert is_tame_at(field(fx.OCTIC_F), 2) == "wild"
    assert is_tame_at(field(fx.OCTIC_F), 3) == "tame"
    assert is_tame_at(field([1, 0, 1]), 2) == "wild"
    assert is_tame_at(field([11, 2, 0, 1]), 3299) == "tame"
    assert is_tame_at(field([11, 2, 0, 1]), 5) == "unramified"


@pytest.mark.parametrize("d, quad, strict", [
    (5, True, True), (-3299, True, True), (12, True, False), (8, True, False),
    (16, False, False), (20, False, False), (-4, True, False), (151717, True, True),
])
def test_fundamental_discriminants(d, quad, strict):
    assert is_fundamental_disc(d) == quad
    assert is_fundamental_disc(d, "strict-squarefree") == strict


def test_conjugacy_of_the_golden_field():
    F = field([-5, 0, 1])
    g = [-1, -1, 1]
    res = are_conjugate(F, field(g))
    assert res.status == "yes"
    alpha, _ = find_root_in(F, g)
    # alpha is (1 +- theta)/2
    assert alpha in ([Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(-1, 2)])


def test_cubics_are_pairwise_non_conjugate():
    fields = [field(c) for c in fx.CUBICS]
    for i in range(4):
        for j in range(i + 1, 4):
            assert are_conjugate(fields[i], fields[j]).status == "no"


def test_conjugacy_of_a_translated_and_scaled_model():
    F = field([11, 2, 0, 1])
    # f(x - 3) and 8 f(x / 2) generate the same field
    shifted = poly.compose([11, 2, 0, 1], [-3, 1])
    scaled = [11 * 8, 2 * 4, 0, 1]
    for g in (shifted, scaled):
        res = are_conjugate(F, field(g))
        assert res.status == "yes"


def test_spinor_triple_non_conjugate():
    a, b, c = (field(x) for x in fx.SPINOR_TRIPLE)
    assert are_conjugate(a, b).status == "no"
    assert are_conjugate(a, c).status == "no"
    assert are_conjugate(b, c).status == "no"
