"""Univariate polynomials over Z and Q.

A polynomial is a list of coefficients ``[c0, c1, ..., cn]`` (constant term
first) with no trailing zeros; the zero polynomial is ``[]``. Coefficients
are ``int`` or ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from ..errors import NotSquarefreeError

Poly = list


def trim(f: Sequence) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Sequence) -> int:
    return len(f) - 1 if f else -1


def lc(f: Sequence):
    return f[-1] if f else 0


def add(f: Sequence, g: Sequence) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    return trim([a + (g[i] if i < len(g) else 0) for i, a in enumerate(f)])


def neg(f: Sequence) -> Poly:
    return [-a for a in f]


def sub(f: Sequence, g: Sequence) -> Poly:
    return add(f, neg(g))


def scale(f: Sequence, c) -> Poly:
    return trim([c * a for a in f])


def mul(f: Sequence, g: Sequence) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(f: Sequence, g: Sequence) -> tuple[Poly, Poly]:
    """Division over Q (exact Fractions unless lc(g) = +-1 and inputs are integral)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    lead = g[-1]
    exact_int = lead in (1, -1) and all(isinstance(x, int) for x in list(f) + list(g))
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if c == 0:
            continue
        c = c * lead if exact_int else Fraction(c) / lead
        q[k] = c
        for j, b in enumerate(g):
            r[k + j] -= c * b
    return trim(q), trim(r[:dg])


def rem(f: Sequence, g: Sequence) -> Poly:
    return divmod_poly(f, g)[1]


def derivative(f: Sequence) -> Poly:
    return trim([i * a for i, a in enumerate(f)][1:])


def evaluate(f: Sequence, x):
    out = 0
    for a in reversed(f):
        out = out * x + a
    return out


def content(f: Sequence[int]) -> int:
    g = 0
    for a in f:
        g = gcd(g, int(a))
    return g


def primitive(f: Sequence) -> Poly:
    """Integer primitive part (positive leading coefficient) of a rational polynomial."""
    if not f:
        return []
    den = 1
    for a in f:
        d = Fraction(a).denominator
        den = den * d // gcd(den, d)
    ints = [int(Fraction(a) * den) for a in f]
    c = content(ints)
    if ints[-1] < 0:
        c = -c
    return [a // c for a in ints]


def gcd_poly(f: Sequence, g: Sequence) -> Poly:
    """Monic gcd over Q (returns [] only when both inputs are zero)."""
    a, b = trim(f), trim(g)
    while b:
        a, b = b, primitive(rem(a, b))
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def compose(f: Sequence, g: Sequence) -> Poly:
    out: Poly = []
    for a in reversed(f):
        out = add(mul(out, g), [a])
    return out


def pseudo_rem(f: Sequence[int], g: Sequence[int]) -> Poly:
    """prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, computed over Z."""
    e = len(f) - len(g) + 1
    if e <= 0:
        return trim(f)
    r = rem([a * g[-1] ** e for a in f], g)
    return [int(a) for a in r]


def _int_content_clear(f: Sequence) -> tuple[Poly, Fraction]:
    """Write f = c * F with F primitive integral; return (F, c)."""
    F = primitive(f)
    return F, Fraction(f[-1]) / F[-1]


def resultant(f: Sequence, g: Sequence):
    """Resultant via the subresultant polynomial remainder sequence."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    A, a = _int_content_clear(f)
    B, b = _int_content_clear(g)
    t = a ** (len(B) - 1) * b ** (len(A) - 1)
    out = t * _resultant_primitive(A, B)
    return int(out) if Fraction(out).denominator == 1 else out


def _resultant_primitive(A: Poly, B: Poly) -> int:
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g = h = 1
    while len(B) > 1:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = pseudo_rem(A, B)
        if not R:
            return 0
        A = B
        div = g * h**delta
        B = [r // div for r in R]
        g = A[-1]
        h = g**delta // h ** (delta - 1) if delta >= 1 else h
    dA = len(A) - 1
    h = B[0] ** dA // h ** (dA - 1) if dA >= 1 else h
    return s * h


def sylvester_resultant(f: Sequence, g: Sequence):
    """Resultant as the determinant of the Sylvester matrix (independent cross-check)."""
    from .matrix import det

    f, g = trim(f), trim(g)
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        row = [0] * size
        for j, a in enumerate(reversed(f)):
            row[i + j] = a
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, b in enumerate(reversed(g)):
            row[i + j] = b
        rows.append(row)
    return det(rows)


def discriminant(f: Sequence):
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    r = Fraction(resultant(f, derivative(f))) / f[-1]
    if n * (n - 1) // 2 % 2:
        r = -r
    return int(r) if r.denominator == 1 else r


def is_squarefree(f: Sequence) -> bool:
    return degree(gcd_poly(f, derivative(f))) == 0


def sturm_sequence(f: Sequence) -> list[Poly]:
    seq = [trim(f), derivative(f)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        pr = primitive(r)
        if (pr[-1] > 0) != (r[-1] > 0):
            pr = neg(pr)
        seq.append(neg(pr))
    return seq


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_roots(f: Sequence) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    f = trim(f)
    if degree(f) < 1:
        return 0
    if not is_squarefree(f):
        raise NotSquarefreeError("Sturm count requires a squarefree polynomial")
    seq = sturm_sequence(f)
    at_pos = [lc(p) for p in seq]
    at_neg = [lc(p) * (-1) ** degree(p) for p in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def count_roots_in(seq: list[Poly], a, b) -> int:
    """Distinct roots in (a, b] from a precomputed Sturm sequence."""
    return _sign_changes([evaluate(p, a) for p in seq]) - _sign_changes([evaluate(p, b) for p in seq])


def root_bound(f: Sequence) -> Fraction:
    """Cauchy bound: every complex root has |z| < bound."""
    lead = abs(Fraction(f[-1]))
    return 1 + max(abs(Fraction(a)) for a in f[:-1]) / lead if len(f) > 1 else Fraction(1)


def power_sums(f: Sequence[int], count: int) -> list:
    """Newton power sums s_k of the roots of monic f, for k = 0 .. count-1."""
    n = len(f) - 1
    if f[-1] != 1:
        raise ValueError("power_sums needs a monic polynomial")
    a = [f[n - i] for i in range(n + 1)]  # a[i] is the coefficient of x^(n-i)
    s = [n]
    for k in range(1, count):
        total = sum(a[i] * s[k - i] for i in range(1, min(k - 1, n) + 1))
        total += k * a[k] if k <= n else 0
        if k > n:
            total = sum(a[i] * s[k - i] for i in range(1, n + 1))
        s.append(-total)
    return s[:count]
