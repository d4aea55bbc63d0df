# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking kernel; same contract as ``_search_py.search``.

Inputs are int64 buffers (``array.array('q')``). The caller guarantees
that every inner product fits in a signed 64-bit integer.
"""

from cpython cimport array
import array


def search(V, W, Py_ssize_t n, offsets, idx, target, bint find_all, long long node_cap):
    cdef long long[:] v = array.array('q', V)
    cdef long long[:] w = array.array('q', W)
    cdef long long[:] off = array.array('q', offsets)
    cdef long long[:] ix = array.array('q', idx)
    cdef long long[:] tg = array.array('q', target)
    cdef array.array chosen_arr = array.array('q', [0] * max(n, 1))
    cdef array.array ptr_arr = array.array('q', [0] * max(n, 1))
    cdef long long[:] chosen = chosen_arr
    cdef long long[:] ptr = ptr_arr
    cdef Py_ssize_t k, l, t
    cdef long long c, s, count = 0, nodes = 0
    cdef bint ok, capped = False
    first = None

    if n == 0:
        return 0, 1, [], 0
    k = 0
    ptr[0] = off[0]
    while k >= 0:
        if ptr[k] >= off[k + 1]:
            k -= 1
            if k >= 0:
                ptr[k] += 1
            continue
        nodes += 1
        if nodes > node_cap:
            capped = True
            break
        c = ix[ptr[k]]
        ok = True
        for l in range(k):
            s = 0
            for t in range(n):
                s += v[chosen[l] * n + t] * w[c * n + t]
            if s != tg[l * n + k]:
                ok = False
                break
        if not ok:
            ptr[k] += 1
            continue
        chosen[k] = c
        if k + 1 == n:
            count += 1
            if first is None:
                first = [chosen[t] for t in range(n)]
                if not find_all:
                    break
            ptr[k] += 1
        else:
            k += 1
            ptr[k] = off[k]
    return (-1 if capped else 0), count, first, nodes
