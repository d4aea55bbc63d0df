"""Polynomials over the prime field F_p and their factorization.

Polynomials are coefficient lists, constant term first, entries in [0, p).
Factorization runs squarefree decomposition, distinct-degree factorization
and Cantor-Zassenhaus equal-degree splitting.
"""

from __future__ import annotations

import random
from typing import Sequence

DEFAULT_SEED = 0x5EED

FpPoly = list


def reduce(f: Sequence[int], p: int) -> FpPoly:
    out = [int(a) % p for a in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] = (out[i] + b) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def sub(f, g, p):
    return add(f, [(-b) % p for b in g], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce(out, p)


def divmod_fp(f, g, p):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv % p
        if c:
            q[k] = c
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    r = r[:dg]
    while r and r[-1] == 0:
        r.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, r


def rem(f, g, p):
    return divmod_fp(f, g, p)[1]


def quo(f, g, p):
    return divmod_fp(f, g, p)[0]


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [a * inv % p for a in f]


def gcd(f, g, p):
    a, b = reduce(f, p), reduce(g, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(f, p):
    return reduce([i * a for i, a in enumerate(f)][1:], p)


def powmod(base, e, modulus, p):
    result = [1]
    base = rem(base, modulus, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), modulus, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), modulus, p)
    return result


def _pth_root(f, p):
    return [f[i] for i in range(0, len(f), p)]


def squarefree_decomposition(f, p) -> list[tuple[FpPoly, int]]:
    """Monic f as a product of pairwise coprime squarefree factors with multiplicities."""
    f = monic(reduce(f, p), p)
    if len(f) <= 1:
        return []
    out: list[tuple[FpPoly, int]] = []
    df = derivative(f, p)
    if not df:
        return [(h, e * p) for h, e in squarefree_decomposition(_pth_root(f, p), p)]
    c = gcd(f, df, p)
    w = quo(f, c, p)
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = quo(w, y, p)
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = quo(c, y, p)
    if len(c) > 1:
        out += [(h, e * p) for h, e in squarefree_decomposition(_pth_root(c, p), p)]
    return out


def distinct_degree(f, p) -> list[tuple[FpPoly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree d."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = quo(f, g, p)
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d, p, rng: random.Random) -> list[FpPoly]:
    """Split a squarefree monic product of degree-d irreducibles (Cantor-Zassenhaus)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = reduce([rng.randrange(p) for _ in range(n)], p)
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            b = a
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                b = add(b, t, p)
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(b, f, p)
        if 1 < len(g) < len(f):
            return equal_degree(g, d, p, rng) + equal_degree(quo(f, g, p), d, p, rng)


def factor_mod_p(f: Sequence[int], p: int, seed: int = DEFAULT_SEED) -> list[tuple[FpPoly, int]]:
    """Complete factorization of f over F_p into monic irreducibles with multiplicities.

    The leading coefficient is dropped; factors are sorted by (degree, coefficients).
    """
    fp = reduce(f, p)
    if len(fp) != len(f) or not fp:
        raise ValueError(f"p = {p} divides the leading coefficient")
    rng = random.Random(seed)
    out = []
    for g, mult in squarefree_decomposition(fp, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin-style check: squarefree and gcd(x^(p^k) - x, f) = 1 for k <= deg/2."""
    f = monic(reduce(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if len(gcd(f, derivative(f, p), p)) > 1:
        return False
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if len(gcd(sub(h, x, p), f, p)) > 1:
            return False
    return True


def degree_pattern(f: Sequence[int], p: int, seed: int = DEFAULT_SEED) -> list[int]:
    """Sorted degrees of the irreducible factors of squarefree f mod p (with multiplicity)."""
    degs = []
    for g, mult in factor_mod_p(f, p, seed):
        degs += [len(g) - 1] * mult
    return sorted(degs)


def roots_mod_p(f: Sequence[int], p: int, seed: int = DEFAULT_SEED) -> list[int]:
    """Distinct roots in F_p."""
    return sorted((-g[0]) % p for g, _ in factor_mod_p(f, p, seed) if len(g) == 2)
