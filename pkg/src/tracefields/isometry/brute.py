"""Exhaustive isometry search over small matrices, used as a test oracle."""

from __future__ import annotations

from itertools import product

from ..algebra import matrix as mat

MAX_DIM = 3
MAX_HEIGHT = 5


def brute_force_isometric(L1, L2, H: int):
    """Search U with entries in [-H, H], det U = +-1 and U^t G1 U = G2.

    Columns are chosen one at a time: column j must have norm G2[j][j] and
    the right inner products with the earlier columns. Returns
    (True, U) or (False, None) meaning "none under this height".
    """
    G1 = [list(r) for r in getattr(L1, "gram", L1)]
    G2 = [list(r) for r in getattr(L2, "gram", L2)]
    n = len(G1)
    if n > MAX_DIM or H > MAX_HEIGHT:
        raise ValueError(f"oracle is capped at dim {MAX_DIM}, height {MAX_HEIGHT}")
    if len(G2) != n:
        return False, None
    vecs = [list(v) for v in product(range(-H, H + 1), repeat=n)]
    images = [mat.matvec(G1, v) for v in vecs]
    cols: list[int] = []

    def dot(a, b):
        return sum(x * y for x, y in zip(vecs[a], images[b]))

    def extend(j):
        if j == n:
            U = mat.transpose([vecs[c] for c in cols])
            return U if abs(mat.det(U)) == 1 else None
        for c in range(len(vecs)):
            if dot(c, c) != G2[j][j]:
                continue
            if all(dot(cols[i], c) == G2[i][j] for i in range(j)):
                cols.append(c)
                found = extend(j + 1)
                if found is not None:
                    return found
                cols.pop()
        return None

    U = extend(0)
    return (U is not None), U
