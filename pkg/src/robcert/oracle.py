"""Brute-force ground truth for testing, factorial-time on purpose.

Two independent evaluations: an exhaustive permutation search for a
Robinson ordering, and a direct per-triple evaluation of the weighted
asteroidal triple definition.  The two verdicts are reported side by
side and deliberately never reconciled here; their equivalence is a
theorem that the test suite checks from outside.
"""

from __future__ import annotations

from .matrix import Ordering, SymMatrix

__all__ = ["OracleVerdict", "brute_force_certify"]

_MAX_N = 9


class OracleVerdict:
    """Result bundle: permutation-search outcome plus all WAT triples
    as label tuples, lexicographically sorted by positions."""

    __slots__ = ("robinsonian", "witness", "all_wats")

    def __init__(self, robinsonian: bool, witness: Ordering | None,
                 all_wats: list):
        self.robinsonian = robinsonian
        self.witness = witness
        self.all_wats = all_wats

    def __repr__(self) -> str:
        return (f"OracleVerdict(robinsonian={self.robinsonian}, "
                f"wats={len(self.all_wats)})")


def _rank_square(A: SymMatrix) -> list[list[int]]:
    # order-isomorphic integer copy; every check below is order-only
    distinct = sorted(set(A.iter_values()))
    rank = {v: i for i, v in enumerate(distinct)}
    n = A.n
    R = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = rank[A.value_pos(i, j)]
            R[i][j] = r
            R[j][i] = r
    return R


def _search_ordering(R: list[list[int]], n: int) -> tuple | None:
    # depth-first over prefixes; appending q after prefix p_0..p_{t-1}
    # is allowed iff R[p_i][q] <= R[p_i][p_{t-1}] and
    # R[p_i][q] <= R[p_{i+1}][q] for all i <= t-2, which extends the
    # row-monotone form one column at a time
    prefix: list[int] = []
    used = [False] * n

    def extend_ok(q: int) -> bool:
        t = len(prefix)
        for i in range(t - 1):
            riq = R[prefix[i]][q]
            if riq > R[prefix[i]][prefix[t - 1]]:
                return False
            if riq > R[prefix[i + 1]][q]:
                return False
        return True

    def rec() -> tuple | None:
        if len(prefix) == n:
            return tuple(prefix)
        for q in range(n):
            if used[q] or not extend_ok(q):
                continue
            used[q] = True
            prefix.append(q)
            out = rec()
            if out is not None:
                return out
            prefix.pop()
            used[q] = False
        return None

    return rec()


def _component_table(R: list[list[int]], n: int) -> list[list[int]]:
    # comp[v][u] = component id of u in the avoidance graph H_v
    comp = [[-1] * n for _ in range(n)]
    for v in range(n):
        labels = comp[v]
        next_id = 0
        for s in range(n):
            if s == v or labels[s] != -1:
                continue
            labels[s] = next_id
            stack = [s]
            while stack:
                u = stack.pop()
                for w in range(n):
                    if w == v or w == u or labels[w] != -1:
                        continue
                    if R[u][w] > min(R[u][v], R[w][v]):
                        labels[w] = next_id
                        stack.append(w)
            next_id += 1
    return comp


def brute_force_certify(A: SymMatrix) -> OracleVerdict:
    """Exhaustively certify a small matrix.

    Tries all permutations (prefix-pruned) for the witness and
    evaluates the WAT definition on every triple.  The witness, when
    one exists, is the lexicographically first Robinson ordering by
    label position.  Refuses matrices with more than 9 labels.
    """
    n = A.n
    if n > _MAX_N:
        raise ValueError(f"brute force is capped at n = {_MAX_N}, got {n}")
    R = _rank_square(A)
    perm = _search_ordering(R, n) if n >= 1 else None
    witness = None
    if perm is not None:
        witness = Ordering(tuple(A.labels[p] for p in perm))
    comp = _component_table(R, n)
    wats = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (comp[k][i] == comp[k][j]
                        and comp[j][i] == comp[j][k]
                        and comp[i][j] == comp[i][k]):
                    wats.append((A.labels[i], A.labels[j], A.labels[k]))
    return OracleVerdict(witness is not None, witness, wats)
