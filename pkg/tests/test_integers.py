import pytest
from hypothesis import given, strategies as st
from sympy import factorint, isprime

from tracefields.algebra.integers import (
    MR_LIMIT,
    MR_WITNESSES,
    factor_integer,
    is_prime,
    is_squarefree,
    legendre,
    rational_reconstruct,
    squarefree_part,
    valuation,
)
from tracefields.errors import PrimalityRangeError


def test_small_primes_match_sieve():
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if isprime(n)]


@pytest.mark.parametrize("n", [3299, 2741, 7537, 34129, 151717, 2**61 - 1])
def test_known_primes(n):
    assert is_prime(n)


def test_strong_pseudoprime_to_small_bases_is_rejected():
    # 3215031751 fools bases 2, 3, 5 and 7
    assert not is_prime(3215031751)


def test_primality_above_certified_range_raises():
    with pytest.raises(PrimalityRangeError):
        n = MR_LIMIT + 1
        while any(n % q == 0 for q in MR_WITNESSES):
            n += 1
        is_prime(n)


def test_octic_discriminant_factorization():
    fac = factor_integer(174960000000)
    assert fac.factors == ((2, 10), (3, 7), (5, 7))
    assert str(fac) == "2^10*3^7*5^7"
    assert fac.value() == 174960000000


def test_negative_and_unit():
    assert factor_integer(-3299).sign == -1
    assert factor_integer(-3299).factors == ((3299, 1),)
    assert factor_integer(1).factors == ()


@given(st.integers(min_value=-10**12, max_value=10**12).filter(bool))
def test_factorization_matches_sympy(n):
    assert dict(factor_integer(n).factors) == {p: e for p, e in factorint(abs(n)).items()}


def test_rho_handles_semiprime_beyond_trial_division():
    p, q = 1000003, 1000033
    assert factor_integer(p * q).factors == ((p, 1), (q, 1))


def test_valuation_and_squarefree():
    assert valuation(48, 2) == 4
    assert squarefree_part(-12) == -3
    assert squarefree_part(50) == 2
    assert is_squarefree(30) and not is_squarefree(18)


def test_legendre():
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1 and legendre(14, 7) == 0


def test_rational_reconstruct():
    m = 10**9 + 7
    a = 3 * pow(7, -1, m) % m
    assert rational_reconstruct(a, m, 1000) == (3, 7)
