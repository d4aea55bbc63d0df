"""Compare the compiled and pure-Python backtracking kernels.

    python benchmarks/bench_isometry.py [--repeat 5]

Each case runs the same search through both kernels, checks that the
results agree, and reports the best wall time of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import time

from tracefields.isometry import _search_py, kernel, lll_gram, short_vectors
from tracefields.isometry.search import _run


def root_lattice_a(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]

CASES = {
    "Z^3 automorphisms (48)": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "D4 automorphisms (1152)": D4,
    "A5 automorphisms (1440)": root_lattice_a(5),
    "A6 automorphisms (10080)": root_lattice_a(6),
}


def prepare(G):
    _, R = lll_gram(G)
    bound = max(R[i][i] for i in range(len(R)))
    return R, short_vectors(R, bound).vectors


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernel.BACKEND != "cython":
        print("compiled kernel not available; build it with 'pip install -e .'")
        return 1
    compiled = kernel.search
    print(f"{'case':<28} {'count':>7} {'nodes':>9} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for name, G in CASES.items():
        R, vecs = prepare(G)
        kernel.search = compiled
        t_c, res_c = best_time(lambda: _run(R, R, vecs, True, 10**8), args.repeat)
        kernel.search = _search_py.search
        t_p, res_p = best_time(lambda: _run(R, R, vecs, True, 10**8), max(1, args.repeat // 2))
        kernel.search = compiled
        assert res_c == res_p, name
        count, _, nodes = res_c
        print(f"{name:<28} {count:>7} {nodes:>9} {t_c:>11.4f} {t_p:>10.4f} {t_p / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
