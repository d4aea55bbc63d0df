from hypothesis import given, settings, strategies as st
from sympy import Matrix, Poly, discriminant as sympy_disc, real_roots, symbols

from tracefields.algebra import poly
from tracefields.errors import NotSquarefreeError

import pytest

x = symbols("x")
coeff = st.integers(min_value=-9, max_value=9)


def polys(min_deg=1, max_deg=6, monic=False):
    def build(cs):
        cs = list(cs)
        if monic:
            cs.append(1)
        return poly.trim(cs)

    return st.lists(coeff, min_size=min_deg + (0 if monic else 1), max_size=max_deg + (0 if monic else 1)).map(
        build).filter(lambda f: len(f) >= min_deg + 1)


def to_sympy(f):
    return Poly(list(reversed(f)), x)


@pytest.mark.parametrize("f, d", [
    ([11, 2, 0, 1], -3299),
    ([15, 0, 0, 0, 0, 0, 0, 0, 1], 2**24 * 3**7 * 5**7),
    ([-5, 0, 1], 20),
])
def test_discriminants(f, d):
    assert poly.discriminant(f) == d


@settings(max_examples=200)
@given(polys(), polys())
def test_resultant_matches_sylvester_determinant(f, g):
    S = Matrix(_sylvester(f, g))
    assert poly.resultant(f, g) == poly.sylvester_resultant(f, g) == S.det()


def _sylvester(f, g):
    m, n = len(f) - 1, len(g) - 1
    rows = [[0] * k + list(reversed(f)) + [0] * (n - 1 - k) for k in range(n)]
    rows += [[0] * k + list(reversed(g)) + [0] * (m - 1 - k) for k in range(m)]
    return rows


@settings(max_examples=200)
@given(polys(min_deg=2))
def test_discriminant_matches_sympy(f):
    assert poly.discriminant(f) == sympy_disc(to_sympy(f))


@pytest.mark.parametrize("f, r", [([-5, 0, 1], 2), ([15, 0, 0, 0, 0, 0, 0, 0, 1], 0), ([11, 2, 0, 1], 1)])
def test_sturm_counts(f, r):
    assert poly.sturm_real_roots(f) == r


@settings(max_examples=200)
@given(polys(min_deg=1, max_deg=7))
def test_sturm_matches_sympy(f):
    if not poly.is_squarefree(f):
        with pytest.raises(NotSquarefreeError):
            poly.sturm_real_roots(f)
        return
    assert poly.sturm_real_roots(f) == len(real_roots(to_sympy(f)))


@settings(max_examples=100)
@given(polys(1, 5), polys(1, 4))
def test_division(f, g):
    q, r = poly.divmod_poly(f, g)
    assert poly.add(poly.mul(q, g), r) == poly.trim(f)
    assert poly.degree(r) < poly.degree(g)


def test_power_sums():
    # x^2 - x - 1: roots phi, psi; p1 = 1, p2 = 3, p3 = 4
    assert poly.power_sums([-1, -1, 1], 4) == [2, 1, 3, 4]


def test_gcd_and_squarefree():
    f = poly.mul([-1, 1], [-1, 1])
    assert not poly.is_squarefree(f)
    assert poly.gcd_poly(f, poly.derivative(f)) == [-1, 1]
