"""Generate the shipped table of totally real quartic fields.

Searches monic quartics x^4 + a x^3 + b x^2 + c x + e over a coefficient
box (a in {0, 1, 2} after translation and x -> -x). A vectorized pass
keeps polynomials with positive discriminant and four real roots. The
only fundamental discriminant a polynomial can have is read off from the
squarefree part of its discriminant, which gives a cheap bound filter.
Splitting patterns at small unramified primes then identify repeated
fields, so the maximal order is computed once per field.

    python tools/make_quartic_table.py --out src/tracefields/data/quartic_fields.txt
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from tracefields.algebra import finite_field as ff
from tracefields.algebra import poly
from tracefields.algebra.integers import factor_integer, primes_up_to
from tracefields.cli.table import FieldTableRecord, write_table
from tracefields.errors import TraceFieldsError
from tracefields.fields import are_conjugate, field_from_poly
from tracefields.fields.conjugacy import find_root_in

KEY_PRIMES = primes_up_to(300)


def fundamental_candidate(d: int) -> int:
    """The unique fundamental discriminant whose quotient into d could be a square."""
    s = 1
    for p, e in factor_integer(d).factors:
        s *= p ** (e % 2)
    return s if s % 4 == 1 else 4 * s


def pattern_key(f, d, count=30):
    key = {}
    for p in KEY_PRIMES:
        if d % p:
            key[p] = tuple(sorted((d, len(g) - 1) for g, d in ff.distinct_degree(ff.reduce(f, p), p)))
            if len(key) == count:
                break
    return key


def keys_agree(a, b) -> bool:
    return all(a[p] == b[p] for p in a.keys() & b.keys())


def same_field(F, L) -> bool:
    alpha, _ = find_root_in(F, list(L.min_poly))
    if alpha is not None:
        return True
    return are_conjugate(F, L).status == "yes"


def size(coeffs):
    return (sum(abs(c) for c in coeffs), tuple(abs(c) for c in reversed(coeffs)), tuple(reversed(coeffs)))


def candidates(args):
    """Yield (a, b, c, e) with positive discriminant and four real roots."""
    b, c, e = np.meshgrid(np.arange(args.b[0], args.b[1] + 1), np.arange(-args.c, args.c + 1),
                          np.arange(-args.e, args.e + 1), indexing="ij")
    b, c, e = (x.ravel().astype(np.int64) for x in (b, c, e))
    for a in range(3):
        d = (256 * e**3 - 192 * a * c * e**2 - 128 * b**2 * e**2 + 144 * b * c**2 * e - 27 * c**4
             + 144 * a**2 * b * e**2 - 6 * a**2 * c**2 * e - 80 * a * b**2 * c * e + 18 * a * b * c**3
             + 16 * b**4 * e - 4 * b**3 * c**2 - 27 * a**4 * e**2 + 18 * a**3 * b * c * e
             - 4 * a**3 * c**3 - 4 * a**2 * b**3 * e + a**2 * b**2 * c**2)
        keep = d > 0
        bb, cc, ee = b[keep], c[keep], e[keep]
        comp = np.zeros((len(bb), 4, 4))
        comp[:, 1, 0] = comp[:, 2, 1] = comp[:, 3, 2] = 1
        comp[:, 0, 3], comp[:, 1, 3], comp[:, 2, 3], comp[:, 3, 3] = -ee, -cc, -bb, -a
        roots = np.linalg.eigvals(comp)
        real = np.all(np.abs(roots.imag) < 1e-6 * (1 + np.abs(roots.real)), axis=1)
        # positive discriminant leaves only 0 or 4 real roots; the eigenvalue
        # test is only a filter and the exact count is confirmed below
        for bi, ci, ei in zip(bb[real].tolist(), cc[real].tolist(), ee[real].tolist()):
            yield a, bi, ci, ei


def search(args):
    by_candidate: dict[int, list] = {}
    t0 = time.time()
    for a, b, c, e in candidates(args):
        f = [e, c, b, a, 1]
        D = poly.discriminant(f)
        d0 = fundamental_candidate(D)
        if d0 <= args.max_disc and poly.sturm_real_roots(f) == 4:
            by_candidate.setdefault(d0, []).append((f, D))
    print(f"{sum(map(len, by_candidate.values()))} polynomials, {len(by_candidate)} candidate "
          f"discriminants, {time.time() - t0:.0f}s", file=sys.stderr, flush=True)
    found = {}
    singles_left = args.singletons
    for d0 in sorted(by_candidate):
        if len(by_candidate[d0]) < 2 and not singles_left:
            continue
        classes = []  # (key, smallest polynomial)
        for f, D in sorted(by_candidate[d0], key=lambda t: size(t[0])):
            key = pattern_key(f, D)
            if not any(keys_agree(k, key) for k, _ in classes):
                classes.append((key, f))
        if len(classes) < 2 and not singles_left:
            continue
        fields = []
        for _, f in classes:
            try:
                F = field_from_poly(f)
            except TraceFieldsError:
                continue
            if F.disc == d0 and not any(same_field(G, F) for G in fields):
                fields.append(F)
        if fields:
            found[d0] = fields
            singles_left -= len(fields) == 1 and singles_left > 0
    print(f"done in {time.time() - t0:.0f}s", file=sys.stderr)
    return found


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--b", type=int, nargs=2, default=(-24, 3))
    ap.add_argument("--c", type=int, default=30)
    ap.add_argument("--e", type=int, default=40)
    ap.add_argument("--max-disc", type=int, default=2 * 10**6)
    ap.add_argument("--singletons", type=int, default=0,
                    help="also list this many single fields of smallest discriminant")
    ap.add_argument("--out", required=True)
    args = ap.parse_args(argv)
    found = search(args)
    records = []
    multi = sorted(d for d, g in found.items() if len(g) > 1)
    single = sorted(d for d, g in found.items() if len(g) == 1)[: args.singletons]
    for d in sorted(multi + single):
        reps = sorted((list(F.input_poly) for F in found[d]), key=size)
        for k, coeffs in enumerate(reps, start=1):
            records.append(FieldTableRecord(f"4.{d}.{k}", tuple(coeffs), d))
    header = (
        "Totally real quartic fields with fundamental discriminant.\n"
        f"Every discriminant <= {args.max_disc} found with two or more non-conjugate fields is listed,\n"
        f"together with the {args.singletons} smallest discriminants carried by a single field.\n"
        f"Generated by tools/make_quartic_table.py (a in 0..2, b in {list(args.b)}, |c| <= {args.c}, "
        f"|e| <= {args.e}).\n"
        "Format: label | c0,c1,c2,c3,c4 | disc"
    )
    write_table(args.out, records, header)
    print(f"{len(records)} fields, {len(multi)} groups of size >= 2", file=sys.stderr)


if __name__ == "__main__":
    main()
