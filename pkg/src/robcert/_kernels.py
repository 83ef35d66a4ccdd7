"""Kernel backend selection and shared post-processing.

Imports the compiled triple-counting kernel when the extension built,
else the numpy/scipy fallback.  BACKEND names the one in use.  Both
expose identical semantics, including the deterministic find_first
order, which the test suite checks whenever both are importable.
"""

from __future__ import annotations

import numpy as np

try:
    from . import _kernels_c as _impl
    BACKEND = "compiled"
except ImportError:
    from . import _kernels_py as _impl
    BACKEND = "python"

triple_counts = _impl.triple_counts
find_first = _impl.find_first


def wat_count(R: np.ndarray) -> int:
    """Number of weighted asteroidal triples of the rank square."""
    if R.shape[0] < 3:
        return 0
    return int(np.count_nonzero(triple_counts(R) == 3))


def decode_slots(slots: np.ndarray, n: int) -> np.ndarray:
    """Inverse of the combinadic slot map; returns (m, 3) positions."""
    hs = np.arange(n, dtype=np.int64)
    binom3 = hs * (hs - 1) * (hs - 2) // 6
    binom2 = hs * (hs - 1) // 2
    hi = np.searchsorted(binom3, slots, side="right") - 1
    rem = slots - binom3[hi]
    mid = np.searchsorted(binom2, rem, side="right") - 1
    lo = rem - binom2[mid]
    return np.stack([lo, mid, hi], axis=1)


def wat_positions(R: np.ndarray) -> np.ndarray:
    """All WAT position triples i < j < k, lexicographically sorted."""
    n = R.shape[0]
    if n < 3:
        return np.empty((0, 3), dtype=np.int64)
    slots = np.nonzero(triple_counts(R) == 3)[0].astype(np.int64)
    rows = decode_slots(slots, n)
    return rows[np.lexsort((rows[:, 2], rows[:, 1], rows[:, 0]))]
