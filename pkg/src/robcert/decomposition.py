"""Homogeneous sets, contraction, ordering merge, and the
critical-element-or-homogeneous-set search.

A set S is homogeneous when every outside element sees all of S with
one value, and strongly homogeneous when those outside values are also
bounded above by every inside value.  Strongly homogeneous proper sets
split recognition into a restriction A[S] and a contraction A/S whose
Robinson orderings splice back together.
"""

from __future__ import annotations

from typing import Iterable

from .matrix import Ordering, SymMatrix, restrict

__all__ = [
    "CriticalElement", "StronglyHomogeneousSet",
    "is_strongly_homogeneous", "contract", "merge_orderings",
    "critical_or_homogeneous",
]


class CriticalElement:
    """Witness: this element must end every Robinson ordering."""

    __slots__ = ("element",)

    def __init__(self, element):
        self.element = element

    def __eq__(self, other) -> bool:
        if not isinstance(other, CriticalElement):
            return NotImplemented
        return self.element == other.element

    def __hash__(self) -> int:
        return hash((CriticalElement, self.element))

    def __repr__(self) -> str:
        return f"CriticalElement({self.element!r})"


class StronglyHomogeneousSet:
    """Witness: a proper strongly homogeneous set, in label order."""

    __slots__ = ("elements",)

    def __init__(self, elements: tuple):
        self.elements = tuple(elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StronglyHomogeneousSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash((StronglyHomogeneousSet, self.elements))

    def __repr__(self) -> str:
        return f"StronglyHomogeneousSet({list(self.elements)!r})"


def is_strongly_homogeneous(A: SymMatrix, S: Iterable) -> bool:
    """True iff A[x,y] = A[x,z] <= A[y,z] for all x outside, y,z in S.

    Vacuously true when |S| <= 1 or S is the whole label set.
    """
    S = set(S)
    for x in S:
        A.position(x)
    inside = [x for x in A.labels if x in S]
    outside = [x for x in A.labels if x not in S]
    if len(inside) <= 1 or not outside:
        return True
    min_inner = min(A.value(y, z)
                    for i, y in enumerate(inside) for z in inside[i + 1:])
    for x in outside:
        vals = {A.value(x, y) for y in inside}
        if len(vals) != 1:
            return False
        if vals.pop() > min_inner:
            return False
    return True


def contract(A: SymMatrix, S: Iterable) -> tuple[SymMatrix, object]:
    """Collapse a proper strongly homogeneous S to its first element.

    Returns the principal submatrix on (V minus S) plus the smallest-
    position representative s, together with s.
    """
    S = set(S)
    if not 2 <= len(S) <= A.n - 1:
        raise ValueError("contraction set must be proper")
    if not is_strongly_homogeneous(A, S):
        raise ValueError("contraction set is not strongly homogeneous")
    s = min(S, key=A.position)
    keep = [x for x in A.labels if x not in S or x == s]
    return restrict(A, keep), s


def merge_orderings(sigma1: Ordering, sigma2: Ordering, s) -> Ordering:
    """Splice an ordering of S into an ordering of A/S at s's slot."""
    if s not in sigma2.perm:
        raise ValueError(f"representative {s!r} missing from the outer "
                         "ordering")
    at = sigma2.perm.index(s)
    return Ordering(sigma2.perm[:at] + sigma1.perm + sigma2.perm[at + 1:])


def critical_or_homogeneous(A: SymMatrix, a=None
                            ) -> CriticalElement | StronglyHomogeneousSet:
    """Shrink Z = V minus {a} until a critical element or a proper
    strongly homogeneous set appears.

    Repeats two moves.  (i) If some outside element v attains its
    minimum over Z on a proper subset, Z shrinks to that argmin.
    (ii) Once no such v exists, Z is homogeneous; while some outside
    element's constant value exceeds some inner entry A[y,z], the
    element z is dropped; if no such pair remains, Z is strongly
    homogeneous and returned.  A singleton Z means its element is
    critical.  Ties everywhere go to the smallest label position.
    """
    if A.n < 2:
        raise ValueError("need at least two elements")
    if a is None:
        a = A.labels[0]
    else:
        A.position(a)
    Z = [x for x in A.labels if x != a]
    while len(Z) > 1:
        inZ = set(Z)
        outside = [v for v in A.labels if v not in inZ]
        shrunk = False
        for v in outside:
            col = [A.value(v, z) for z in Z]
            m = min(col)
            arg = [z for z, val in zip(Z, col) if val == m]
            if len(arg) < len(Z):
                Z = arg
                shrunk = True
                break
        if shrunk:
            continue
        # every outside element is now constant on Z
        const = {v: A.value(v, Z[0]) for v in outside}
        cmax = max(const.values())
        drop = None
        for w in Z:
            if any(A.value(y, w) < cmax for y in Z if y != w):
                drop = w
                break
        if drop is None:
            return StronglyHomogeneousSet(tuple(Z))
        Z.remove(drop)
    return CriticalElement(Z[0])
