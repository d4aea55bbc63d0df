"""Pure-Python backtracking kernel for the isometry search.

Both kernels share one calling convention. ``V`` and ``W`` are flat
row-major tables of candidate vectors and their images under the first
Gram matrix (``W[c] = G1 V[c]``). Position ``k`` of the search may take the
candidates ``idx[offsets[k]:offsets[k + 1]]``; ``target`` is the flat
``n x n`` Gram matrix the chosen vectors must realise, in search order.

Returns ``(status, count, first, nodes)``: status 0 for a finished search,
-1 when the node cap was hit; ``first`` is the first complete assignment in
depth-first order, or None.
"""


def search(V, W, n, offsets, idx, target, find_all, node_cap):
    rows_v = [tuple(V[c * n:(c + 1) * n]) for c in range(len(V) // n)]
    rows_w = [tuple(W[c * n:(c + 1) * n]) for c in range(len(W) // n)]
    cand = [list(idx[offsets[k]:offsets[k + 1]]) for k in range(n)]
    chosen = [0] * n
    count = 0
    first = None
    nodes = 0

    def extend(k):
        nonlocal count, first, nodes
        for c in cand[k]:
            nodes += 1
            if nodes > node_cap:
                return True
            wc = rows_w[c]
            ok = True
            for l in range(k):
                v = rows_v[chosen[l]]
                if sum(a * b for a, b in zip(v, wc)) != target[l * n + k]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[k] = c
            if k + 1 == n:
                count += 1
                if first is None:
                    first = list(chosen)
                if not find_all:
                    return False
            elif extend(k + 1):
                return True
            if first is not None and not find_all:
                return False
        return False

    capped = extend(0) if n else False
    if n == 0:
        count, first = 1, []
    return (-1 if capped else 0), count, first, nodes
