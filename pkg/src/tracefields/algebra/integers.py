"""Integer arithmetic: primality, factorization and small number-theoretic helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ..errors import FactorizationTimeout, PrimalityRangeError

# Deterministic Miller-Rabin: the first twelve primes as witnesses are
# correct for every n < 3317044064679887385961981 (Sorenson & Webster).
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_LIMIT = 3317044064679887385961981

TRIAL_DIVISION_LIMIT = 10**6
RHO_MAX_ITERATIONS = 10**8


@lru_cache(maxsize=None)
def primes_up_to(n: int) -> tuple[int, ...]:
    """Sieve of Eratosthenes."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i in range(n + 1) if sieve[i])


def iter_primes(start: int = 2) -> Iterator[int]:
    """Yield primes >= start, indefinitely."""
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= MR_LIMIT:
        raise PrimalityRangeError(f"{n} exceeds the deterministic Miller-Rabin range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def __str__(self) -> str:
        if not self.factors:
            return str(self.sign)
        body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + body


def _brent_rho(n: int, max_iter: int) -> int:
    """Return a nontrivial factor of the odd composite n (Pollard rho, Brent's cycle detection)."""
    budget = max_iter
    for c in range(1, 50):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            budget -= r
            if budget <= 0:
                raise FactorizationTimeout(f"Pollard rho effort exhausted on {n}")
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationTimeout(f"Pollard rho failed on {n}")


def factor_integer(n: int, max_iter: int = RHO_MAX_ITERATIONS) -> PrimeFactorization:
    """Complete factorization of a nonzero integer with certified prime factors."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    counts: dict[int, int] = {}
    for p in primes_up_to(TRIAL_DIVISION_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent_rho(m, max_iter)
        stack += [d, m // d]
    return PrimeFactorization(sign, tuple(sorted(counts.items())))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_part(n: int) -> int:
    """Signed squarefree integer in the square class of n."""
    if n == 0:
        raise ValueError("squarefree part of 0")
    fac = factor_integer(n)
    out = fac.sign
    for p, e in fac.factors:
        if e % 2:
            out *= p
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor_integer(n).factors)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def rational_reconstruct(a: int, m: int, bound: int):
    """Return (num, den) with num = a*den mod m, |num| <= bound, 0 < den <= bound, or None."""
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if (r1 - a * s1) % m:
        return None
    return r1, s1
