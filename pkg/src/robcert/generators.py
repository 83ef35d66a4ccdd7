"""Deterministic test instance generators.

All generators take an integer seed and produce the same instance for
the same arguments.  Matrix entries stay small exact rationals so
files round-trip bit-exact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .matrix import SymMatrix
from .uig import Graph

__all__ = ["robinson_matrix", "perturbed_matrix", "random_matrix",
           "named_graph", "GRAPH_FAMILIES"]


def robinson_matrix(n: int, seed: int) -> SymMatrix:
    """Random Robinsonian matrix with a hidden random ordering.

    Rows are made monotone toward the diagonal by placing points on a
    line: similarity decays with distance, floored at zero.  A random
    relabeling then hides the ordering, so certification has to
    recover it.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    pts = sorted(rng.randrange(0, 3 * n + 1) for _ in range(n))
    reach = rng.randrange(1, 3 * n + 2)
    perm = list(range(n))
    rng.shuffle(perm)

    def entry(u, v):
        d = abs(pts[perm[u]] - pts[perm[v]])
        return Fraction(max(0, reach - d))

    return SymMatrix.from_function(range(n), entry)


def perturbed_matrix(n: int, seed: int, swaps: int | None = None) -> SymMatrix:
    """Robinson matrix damaged by swapping random off-diagonal entry
    pairs (applied symmetrically); usually not Robinsonian."""
    base = robinson_matrix(n, seed)
    rng = random.Random(seed + 0x9E37)
    if swaps is None:
        swaps = max(1, n // 2)
    vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            vals[(i, j)] = base.value_pos(i, j)
    keys = sorted(vals)
    for _ in range(swaps):
        a = keys[rng.randrange(len(keys))]
        b = keys[rng.randrange(len(keys))]
        vals[a], vals[b] = vals[b], vals[a]
    return SymMatrix.from_function(
        range(n), lambda u, v: vals[(min(u, v), max(u, v))])


def random_matrix(n: int, seed: int, lo: int = 0, hi: int = 3) -> SymMatrix:
    """Independent uniform integer entries in [lo, hi]."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    return SymMatrix.from_function(
        range(n), lambda u, v: Fraction(rng.randint(lo, hi)))


def _path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def _cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def _claw_graph(n: int) -> Graph:
    return Graph(range(4), [(0, 1), (0, 2), (0, 3)])


def _net_graph(n: int) -> Graph:
    # triangle with one pendant vertex per corner
    return Graph(range(6),
                 [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


GRAPH_FAMILIES = {
    "path": _path_graph,
    "cycle": _cycle_graph,
    "claw": _claw_graph,
    "net": _net_graph,
}


def named_graph(name: str, n: int) -> Graph:
    """Member of a named family; claw and net have fixed size."""
    try:
        fam = GRAPH_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None
    if n < 1:
        raise ValueError("need n >= 1")
    return fam(n)
