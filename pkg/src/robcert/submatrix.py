"""Maximal Robinsonian submatrices and minimal obstruction subsets.

I_A collects the maximal element subsets whose principal submatrix is
Robinsonian, F_A their complements, and C_A the minimal subsets whose
principal submatrix is not Robinsonian.  Since Robinsonian-ness is
closed under taking principal submatrices, the three families are tied
by hypergraph transversal duality, which the enumerator checks
outright.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .certificates import RobinsonOrdering
from .certify import certify
from .matrix import SymMatrix, restrict
from .watenum import find_one_wat, wat_triples

__all__ = ["SubsetFamilies", "is_maximal_robinsonian",
           "is_minimal_wa_cycle", "enumerate_families",
           "greedy_robinsonian_core"]


@dataclass(frozen=True)
class SubsetFamilies:
    maximal_robinsonian: frozenset
    minimal_deletions: frozenset
    minimal_cycles: frozenset


def _is_rob(A: SymMatrix, subset) -> bool:
    members = [x for x in A.labels if x in subset]
    if len(members) <= 2:
        return True
    return isinstance(certify(restrict(A, members)), RobinsonOrdering)


def _check_labels(A: SymMatrix, S) -> frozenset:
    S = frozenset(S)
    for x in S:
        if x not in A:
            raise ValueError(f"unknown element {x!r}")
    return S


def is_maximal_robinsonian(A: SymMatrix, I) -> bool:
    """True iff A[I] is Robinsonian and no proper superset keeps it so."""
    I = _check_labels(A, I)
    if not _is_rob(A, I):
        return False
    return all(x in I or not _is_rob(A, I | {x}) for x in A.labels)


def is_minimal_wa_cycle(A: SymMatrix, C) -> bool:
    """True iff A[C] is not Robinsonian but every one-element deletion
    is."""
    C = _check_labels(A, C)
    if len(C) < 3:
        raise ValueError("a candidate cycle needs at least three elements")
    if _is_rob(A, C):
        return False
    return all(_is_rob(A, C - {x}) for x in C)


def enumerate_families(A: SymMatrix, bound: int = 12) -> SubsetFamilies:
    """Exhaustive subset scan for I_A, F_A and C_A at small sizes.

    Also checks the transversal duality between the families; the scan
    is exponential and refuses matrices beyond `bound` elements.
    """
    n = A.n
    if n > bound:
        raise ValueError(f"{n} elements exceed the enumeration bound {bound}")
    labels = A.labels
    rob = [True] * (1 << n)
    for mask in range(1 << n):
        if mask.bit_count() <= 2:
            continue
        rob[mask] = _is_rob(A, {labels[i] for i in range(n) if mask >> i & 1})

    def unpack(mask):
        return frozenset(labels[i] for i in range(n) if mask >> i & 1)

    full = (1 << n) - 1
    maximal = frozenset(
        unpack(mask) for mask in range(1 << n)
        if rob[mask] and all(mask >> i & 1 or not rob[mask | (1 << i)]
                             for i in range(n)))
    minimal_cyc = frozenset(
        unpack(mask) for mask in range(1 << n)
        if not rob[mask] and all(not (mask >> i & 1)
                                 or rob[mask & ~(1 << i)]
                                 for i in range(n)))
    deletions = frozenset(unpack(full) - I for I in maximal)

    # transversal duality between the deletion and cycle families
    for C in minimal_cyc:
        assert all(C & F for F in deletions)
        for x in C:
            sub = C - {x}
            assert any(not (sub & F) for F in deletions)
    return SubsetFamilies(maximal, deletions, minimal_cyc)


def greedy_robinsonian_core(A: SymMatrix) -> tuple:
    """Heuristic Robinsonian subset: repeatedly delete one element of
    the currently found WAT.

    The victim is the WAT element hit by the most triples of the
    current instance, ties broken by position.  The result is
    Robinsonian but carries no maximality or maximum-size guarantee.
    """
    keep = list(A.labels)
    while True:
        B = A if len(keep) == A.n else restrict(A, keep)
        if len(keep) <= 2 or isinstance(certify(B), RobinsonOrdering):
            return tuple(keep)
        w = find_one_wat(B)
        freq = Counter()
        for t in wat_triples(B):
            freq.update(t)
        victim = max((w.x, w.y, w.z),
                     key=lambda e: (freq[e], -A.position(e)))
        keep.remove(victim)
