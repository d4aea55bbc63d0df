"""Integral isometry of positive definite lattices by backtracking.

Both Gram matrices are LLL-reduced first. The basis vectors of the second
reduced lattice are then matched, one position at a time, against short
vectors of the first with the same norm, pruning on inner products with
the vectors already chosen. Positions with fewer candidates go first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..algebra import matrix as mat
from ..errors import SearchEffortExceeded
from ..traceforms import QuadLattice, gram_mod
from . import kernel
from .enumeration import lll_gram, require_positive_definite, short_vectors, theta_slice

NODE_CAP = 10**7
INT64_LIMIT = 2**62


@dataclass(frozen=True)
class IsometryResult:
    isometric: bool
    witness: tuple[tuple[int, ...], ...] | None = None
    separator: tuple[Any, ...] | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.isometric


def _as_lattice(L) -> QuadLattice:
    return L if isinstance(L, QuadLattice) else QuadLattice(L)


def _run(G1, R2, vectors, find_all, node_cap):
    """Match the basis of R2 against the given vectors of G1."""
    n = len(G1)
    both = [v for v, _ in vectors] + [tuple(-c for c in v) for v, _ in vectors]
    norms = [nv for _, nv in vectors] * 2
    cands = [[c for c in range(len(both)) if norms[c] == R2[j][j]] for j in range(n)]
    order = sorted(range(n), key=lambda j: (len(cands[j]), j))
    if any(not cands[j] for j in order):
        return 0, None, 0
    flat_v = [x for v in both for x in v]
    images = [mat.matvec(G1, list(v)) for v in both]
    flat_w = [x for w in images for x in w]
    offsets, idx = [0], []
    for j in order:
        idx.extend(cands[j])
        offsets.append(len(idx))
    target = [R2[a][b] for a in order for b in order]
    big = max(map(abs, flat_v or [0])) * max(map(abs, flat_w or [0])) * max(n, 1)
    search = kernel.search if big < INT64_LIMIT else kernel.fallback_search
    status, count, first, nodes = search(flat_v, flat_w, n, offsets, idx, target, find_all, node_cap)
    if status < 0:
        raise SearchEffortExceeded(f"isometry search exceeded {node_cap} nodes")
    solution = None
    if first is not None:
        solution = [None] * n
        for pos, c in zip(order, first):
            solution[pos] = both[c]
    return count, solution, nodes


def _first_difference(r1, r2):
    for m, (a, b) in enumerate(zip(r1, r2), start=1):
        if a != b:
            return m, a, b
    return None


def is_isometric(L1, L2, node_cap: int = NODE_CAP) -> IsometryResult:
    """Decide whether U^t G1 U = G2 for some unimodular integral U."""
    A, B = _as_lattice(L1), _as_lattice(L2)
    require_positive_definite(A.gram)
    require_positive_definite(B.gram)
    if A.dim != B.dim:
        return IsometryResult(False, separator=("dim", A.dim, B.dim))
    if A.det != B.det:
        return IsometryResult(False, separator=("det", A.det, B.det))
    if A.gram == B.gram:
        return IsometryResult(True, witness=tuple(map(tuple, mat.identity(A.dim))))
    z1, z2 = gram_mod(A, 2)[1], gram_mod(B, 2)[1]
    if z1 != z2:
        return IsometryResult(False, separator=("gram-mod-2-zero", z1, z2))
    T1, R1 = lll_gram(A.gram)
    T2, R2 = lll_gram(B.gram)
    bound = max(max(R1[i][i] for i in range(A.dim)), max(R2[i][i] for i in range(B.dim)))
    sv1, sv2 = short_vectors(R1, bound), short_vectors(R2, bound)
    if sv1.minimum != sv2.minimum:
        return IsometryResult(False, separator=("minimum", sv1.minimum, sv2.minimum))
    diff = _first_difference(theta_slice(R1, bound, sv1), theta_slice(R2, bound, sv2))
    if diff is not None:
        return IsometryResult(False, separator=("theta",) + diff)
    _, solution, nodes = _run(R1, R2, sv1.vectors, False, node_cap)
    if solution is None:
        return IsometryResult(False, separator=("exhaustive-search", nodes), nodes=nodes)
    X = mat.transpose([list(v) for v in solution])
    U = mat.matmul(mat.matmul(T1, X), mat.inverse(T2))
    U = mat.to_int(U)
    if mat.congruence(A.gram, U) != [list(r) for r in B.gram] or abs(mat.det(U)) != 1:
        raise AssertionError("isometry witness failed verification")
    return IsometryResult(True, witness=tuple(map(tuple, U)), nodes=nodes)


def automorphism_count(L, node_cap: int = NODE_CAP) -> int:
    """Order of the integral orthogonal group {U : U^t G U = G}."""
    A = _as_lattice(L)
    require_positive_definite(A.gram)
    _, R = lll_gram(A.gram)
    bound = max(R[i][i] for i in range(A.dim))
    count, _, _ = _run(R, R, short_vectors(R, bound).vectors, True, node_cap)
    return count


def verify_witness(G1, G2, U) -> bool:
    return mat.congruence(G1, U) == [list(r) for r in G2] and abs(mat.det(U)) == Fraction(1)
