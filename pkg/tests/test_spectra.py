import random

import pytest
from sympy import GF, Poly, symbols

from conftest import field
from tracefields import fixtures as fx
from tracefields.errors import TraceFieldsError
from tracefields.spectra import compare_spectra, non_conjugacy_certificate, splitting_spectrum

x = symbols("x")


def sympy_degrees(coeffs, p):
    _, factors = Poly(list(reversed(coeffs)), x, domain=GF(p)).factor_list()
    return sorted(f.degree() for f, e in factors for _ in range(e))


def test_pure_cubics_separate_at_2():
    c = compare_spectra(field([-2, 0, 0, 1]), field([-3, 0, 0, 1]), 10)
    assert c.status == "distinguished" and c.prime == 2
    assert sorted(c.types[0].pairs) == [(3, 1)]
    assert sorted(c.types[1].pairs) == [(1, 1), (1, 2)]


def test_same_field_two_models():
    c = compare_spectra(field([-1, -1, 1]), field([-5, 0, 1]), 200)
    assert c.consistent and c.compared == 45  # 2 divides the index of x^2 - 5


def test_index_primes_are_excluded():
    spectrum = splitting_spectrum(field([-5, 0, 1]), 20)
    assert 2 not in spectrum and spectrum.excluded[0][0] == 2
    assert 3 in spectrum and 5 in spectrum


def test_septic_pair():
    F, L = field(fx.SEPTIC_F), field(fx.SEPTIC_L)
    c = compare_spectra(F, L, 2741)
    assert c.status == "distinguished" and c.prime == 2741
    assert sorted(c.types[0].pairs) == sorted(fx.SEPTIC_SPLIT_F)
    assert sorted(c.types[1].pairs) == sorted(fx.SEPTIC_SPLIT_L)
    assert compare_spectra(F, L, 2740).consistent


def test_certificate():
    cert = non_conjugacy_certificate(field([-2, 0, 0, 1]), field([-3, 0, 0, 1]))
    assert cert[0] == 2


def test_unramified_types_match_sympy():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 5)
        coeffs = [rng.randint(-9, 9) for _ in range(n)] + [1]
        try:
            F = field(tuple(coeffs))
        except TraceFieldsError:
            continue
        spectrum = splitting_spectrum(F, 60)
        for p, split in spectrum.entries.items():
            assert sum(e * f for e, f in split.pairs) == n
            if F.disc % p:
                assert all(e == 1 for e, _ in split.pairs)
                assert sorted(f for _, f in split.pairs) == sympy_degrees(list(F.min_poly), p)


@pytest.mark.parametrize("coeffs", [fx.CUBICS[0], fx.QUARTICS[0]])
def test_ramified_prime_has_a_ramification_index(coeffs):
    F = field(coeffs)
    for p in F.ramified_primes:
        if F.index % p:
            assert any(e > 1 for e, _ in splitting_spectrum(F, p)[p].pairs)
