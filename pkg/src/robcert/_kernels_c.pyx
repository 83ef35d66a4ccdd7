# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled triple-counting kernel; see _kernels_py for the contract.

Counting first resolves every pivot's avoidance components by
union-find with path halving, then walks triples lo < mid < hi in slot
order so the counter array is written sequentially; the transposed
component table keeps the innermost reads stride-1 as well.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline Py_ssize_t _find(Py_ssize_t[::1] parent, Py_ssize_t i) nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


cdef inline Py_ssize_t _slot(Py_ssize_t lo, Py_ssize_t mid,
                             Py_ssize_t hi) nogil:
    return lo + mid * (mid - 1) // 2 + hi * (hi - 1) * (hi - 2) // 6


cdef inline Py_ssize_t _slot3(Py_ssize_t u, Py_ssize_t w,
                              Py_ssize_t v) nogil:
    # u < w; place v to sort the triple
    if v < u:
        return _slot(v, u, w)
    elif v < w:
        return _slot(u, v, w)
    return _slot(u, w, v)


cdef void _union_pivot(const cnp.int64_t[:, ::1] R, Py_ssize_t v,
                       Py_ssize_t[::1] parent) nogil:
    cdef Py_ssize_t n = R.shape[0]
    cdef Py_ssize_t u, w, ru, rw
    cdef cnp.int64_t uv, wv, m
    for u in range(n):
        parent[u] = u
    for u in range(n):
        if u == v:
            continue
        uv = R[u, v]
        for w in range(u + 1, n):
            if w == v:
                continue
            wv = R[w, v]
            m = uv if uv < wv else wv
            if R[u, w] > m:
                ru = _find(parent, u)
                rw = _find(parent, w)
                if ru != rw:
                    parent[ru] = rw
    for u in range(n):
        parent[u] = _find(parent, u)


def triple_counts(const cnp.int64_t[:, ::1] R):
    """Counter array of length C(n,3), entries in 0..3."""
    cdef Py_ssize_t n = R.shape[0]
    f_arr = np.zeros(n * (n - 1) * (n - 2) // 6, dtype=np.uint8)
    cdef cnp.uint8_t[::1] f = f_arr
    if n < 3:
        return f_arr
    P_arr = np.empty((n, n), dtype=np.intp)
    cdef Py_ssize_t[:, ::1] P = P_arr
    cdef Py_ssize_t v, i, j, k
    for v in range(n):
        _union_pivot(R, v, P[v])
    PT_arr = np.ascontiguousarray(P_arr.T)
    cdef Py_ssize_t[:, ::1] PT = PT_arr
    cdef Py_ssize_t rowbase
    cdef cnp.uint8_t c
    with nogil:
        for k in range(2, n):
            for j in range(1, k):
                rowbase = (k * (k - 1) * (k - 2) // 6
                           + j * (j - 1) // 2)
                for i in range(j):
                    c = 0
                    if P[k, i] == P[k, j]:
                        c += 1
                    if P[j, i] == P[j, k]:
                        c += 1
                    if PT[j, i] == PT[k, i]:
                        c += 1
                    f[rowbase + i] = c
    return f_arr


def find_first(const cnp.int64_t[:, ::1] R):
    """Positions of the first triple to reach count 3, or None.

    Same order as the fallback kernel: smallest completing pivot,
    then lexicographically smallest completing pair.
    """
    cdef Py_ssize_t n = R.shape[0]
    if n < 3:
        return None
    f_arr = np.zeros(n * (n - 1) * (n - 2) // 6, dtype=np.uint8)
    cdef cnp.uint8_t[::1] f = f_arr
    parent_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] parent = parent_arr
    cdef Py_ssize_t v, u, w, s
    for v in range(n):
        _union_pivot(R, v, parent)
        for u in range(n):
            if u == v:
                continue
            for w in range(u + 1, n):
                if w == v:
                    continue
                if parent[u] == parent[w]:
                    s = _slot3(u, w, v)
                    f[s] += 1
                    if f[s] == 3:
                        tri = sorted((u, w, v))
                        return (tri[0], tri[1], tri[2])
    return None
