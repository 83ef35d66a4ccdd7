"""Pure numpy/scipy triple-counting kernel.

Works on a rank-compressed int64 square; all predicates are order
comparisons, so ranks are enough.  Triples of positions lo < mid < hi
map to flat counter slots by the combinadic index
lo + C(mid,2) + C(hi,3).  Counting resolves every pivot's avoidance
components first, then fills slot blocks in order; a slot holds how
many of its triple's three pairs are connected with the third element
as pivot, and slots at 3 are exactly the weighted asteroidal triples.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


def _pivot_pairs(R: np.ndarray, v: int):
    # all pairs u < w (both != v) connected in H_v, as index arrays
    n = R.shape[0]
    col = R[:, v]
    E = R > np.minimum.outer(col, col)
    np.fill_diagonal(E, False)
    E[v, :] = False
    E[:, v] = False
    ncomp, lab = connected_components(csr_matrix(E), directed=False)
    sizes = np.bincount(lab, minlength=ncomp)
    us, ws = [], []
    for c in np.nonzero(sizes >= 2)[0]:
        members = np.nonzero(lab == c)[0]
        ii, jj = np.triu_indices(len(members), 1)
        us.append(members[ii])
        ws.append(members[jj])
    if not us:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(us), np.concatenate(ws)


def _slots(u: np.ndarray, w: np.ndarray, v: int) -> np.ndarray:
    # u < w throughout; merge v in to get sorted triples
    lo = np.minimum(u, v)
    hi = np.maximum(w, v)
    mid = u + w + v - lo - hi
    return lo + mid * (mid - 1) // 2 + hi * (hi - 1) * (hi - 2) // 6


def _component_labels(R: np.ndarray) -> np.ndarray:
    # row v holds the H_v component label of every position
    n = R.shape[0]
    P = np.empty((n, n), dtype=np.int64)
    for v in range(n):
        col = R[:, v]
        E = R > np.minimum.outer(col, col)
        np.fill_diagonal(E, False)
        E[v, :] = False
        E[:, v] = False
        _, P[v] = connected_components(csr_matrix(E), directed=False)
    return P


def triple_counts(R: np.ndarray) -> np.ndarray:
    """Counter array of length C(n,3), entries in 0..3."""
    n = R.shape[0]
    f = np.zeros(n * (n - 1) * (n - 2) // 6, dtype=np.uint8)
    if n < 3:
        return f
    P = _component_labels(R)
    for k in range(2, n):
        a = P[k, :k]
        M = P[:k, :k]
        vcol = P[:k, k]
        c1 = a[:, None] == a[None, :]
        d = M == vcol[:, None]
        S = c1.astype(np.uint8) + d.T.astype(np.uint8) + d.astype(np.uint8)
        # S[i, j] only matters for i < j; d.T supplies the [j, i] reads
        jv, iv = np.tril_indices(k, -1)
        base = k * (k - 1) * (k - 2) // 6
        f[base:base + len(jv)] = S[iv, jv]
    return f


def find_first(R: np.ndarray):
    """Positions of the first triple to reach count 3, or None.

    "First" means: smallest pivot v at which any slot reaches 3,
    breaking ties by the lexicographically smallest completing pair.
    """
    n = R.shape[0]
    f = np.zeros(n * (n - 1) * (n - 2) // 6, dtype=np.uint8)
    for v in range(n):
        u, w = _pivot_pairs(R, v)
        if not len(u):
            continue
        slots = _slots(u, w, v)
        f[slots] += 1
        done = f[slots] == 3
        if done.any():
            uc, wc = u[done], w[done]
            at = np.lexsort((wc, uc))[0]
            tri = sorted((int(uc[at]), int(wc[at]), v))
            return tuple(tri)
    return None
