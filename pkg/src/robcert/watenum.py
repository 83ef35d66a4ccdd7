"""Enumeration of weighted asteroidal triples in O(n^3).

One pass per pivot v: every pair lying in one connected component of
the avoidance graph H_v bumps a counter on the triple {pair, v}.  A
triple counts 3 exactly when all three of its avoidance relations
hold, i.e. exactly when it is a WAT.  The counting loops run on a
rank-compressed integer copy of the matrix through the selected
kernel backend; triples are upgraded to full certificates by path
reconstruction on demand.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .certificates import WeightedAsteroidalTriple, make_wat
from .matrix import SymMatrix

__all__ = [
    "TripleCounter", "triple_counter", "dense_ranks",
    "enumerate_wats", "wat_triples", "count_wats", "find_one_wat",
]


def dense_ranks(A: SymMatrix) -> np.ndarray:
    """Order-isomorphic int64 square of entry ranks; diagonal zero."""
    n = A.n
    distinct = sorted(set(A.iter_values()))
    rank = {v: i for i, v in enumerate(distinct)}
    R = np.zeros((n, n), dtype=np.int64)
    pos = 0
    flat = list(A.iter_values())
    for i in range(n):
        for j in range(i + 1, n):
            r = rank[flat[pos]]
            pos += 1
            R[i, j] = r
            R[j, i] = r
    return np.ascontiguousarray(R)


class TripleCounter:
    """Per-triple counts of satisfied avoidance relations (0..3)."""

    __slots__ = ("labels", "_f", "_n")

    def __init__(self, labels: tuple, f: np.ndarray):
        self.labels = labels
        self._n = len(labels)
        self._f = f

    def _slot(self, i: int, j: int, k: int) -> int:
        lo, mid, hi = sorted((i, j, k))
        if lo == mid or mid == hi:
            raise ValueError("triple elements must be distinct")
        return lo + mid * (mid - 1) // 2 + hi * (hi - 1) * (hi - 2) // 6

    def count(self, x, y, z) -> int:
        idx = self.labels.index
        return int(self._f[self._slot(idx(x), idx(y), idx(z))])

    def __len__(self) -> int:
        return len(self._f)


def triple_counter(A: SymMatrix) -> TripleCounter:
    if A.n < 3:
        return TripleCounter(A.labels, np.zeros(0, dtype=np.uint8))
    return TripleCounter(A.labels, _kernels.triple_counts(dense_ranks(A)))


def wat_triples(A: SymMatrix) -> list[tuple]:
    """All WAT triples as label tuples, sorted by positions."""
    if A.n < 3:
        return []
    rows = _kernels.wat_positions(dense_ranks(A))
    labels = A.labels
    return [(labels[i], labels[j], labels[k]) for i, j, k in rows]


def enumerate_wats(A: SymMatrix) -> list[WeightedAsteroidalTriple]:
    """All WATs with reconstructed witness paths, sorted by triple."""
    out = []
    for x, y, z in wat_triples(A):
        w = make_wat(A, x, y, z)
        assert w is not None
        out.append(w)
    return out


def count_wats(A: SymMatrix) -> int:
    if A.n < 3:
        return 0
    return _kernels.wat_count(dense_ranks(A))


def find_one_wat(A: SymMatrix) -> WeightedAsteroidalTriple | None:
    """First WAT in deterministic pivot order, with paths, or None."""
    if A.n < 3:
        return None
    hit = _kernels.find_first(dense_ranks(A))
    if hit is None:
        return None
    i, j, k = hit
    w = make_wat(A, A.labels[i], A.labels[j], A.labels[k])
    assert w is not None
    return w
