"""The recursive certifying recognizer.

Entry point certify(A) returns either a Robinson ordering or a
weighted asteroidal triple.  The work happens in certify_with_critical
which, given a critical root a, inspects the similarity layers of a
and of the far endpoint b they produce, then either stops with an
explicit WAT, hands back a proper strongly homogeneous set for the
driver's restriction/contraction recursion, or splits the element set
around a cut element c and recurses on two strictly smaller matrices
whose orderings concatenate.

All structural claims behind the case analysis only nominate candidate
triples; every emitted WAT is rebuilt from scratch by path search
against the original matrix and verified, with full enumeration as a
final fallback, so a reasoning bug can cost time but never soundness.
"""

from __future__ import annotations

import sys

from .avoidance import is_critical
from .certificates import (NotRobinsonian, RobinsonOrdering,
                           WeightedAsteroidalTriple, make_wat, verify_wat)
from .decomposition import (CriticalElement, contract,
                            critical_or_homogeneous,
                            is_strongly_homogeneous, merge_orderings)
from .layers import check_layer_stars, similarity_layers, wat_from_noncover
from .matrix import Ordering, SymMatrix, restrict, verify_robinson_ordering
from .values import transformed
from .watenum import find_one_wat

__all__ = [
    "StronglyHomogeneous", "Wat", "CompatibleOrdering", "CertifyOutcome",
    "certify", "certify_with_critical",
]


class StronglyHomogeneous:
    """Outcome: a proper strongly homogeneous set, in label order."""

    __slots__ = ("elements",)

    def __init__(self, elements: tuple):
        self.elements = tuple(elements)

    def __repr__(self) -> str:
        return f"StronglyHomogeneous({list(self.elements)!r})"


class Wat:
    """Outcome: the matrix is not Robinsonian; here is the witness."""

    __slots__ = ("wat",)

    def __init__(self, wat: WeightedAsteroidalTriple):
        self.wat = wat

    def __repr__(self) -> str:
        return f"Wat({self.wat!r})"


class CompatibleOrdering:
    """Outcome: a Robinson ordering compatible with the root's layers."""

    __slots__ = ("ordering",)

    def __init__(self, ordering: Ordering):
        self.ordering = ordering

    def __repr__(self) -> str:
        return f"CompatibleOrdering({self.ordering!r})"


CertifyOutcome = StronglyHomogeneous | Wat | CompatibleOrdering


def _wat_from_candidates(A: SymMatrix, candidates
                         ) -> WeightedAsteroidalTriple:
    """First candidate triple that carries all three witness paths.

    Falls back to full enumeration; the callers invoke this only when
    the surrounding case analysis proves a WAT exists, so coming up
    empty is an internal error.
    """
    tried = set()
    for cand in candidates:
        if len(set(cand)) != 3:
            continue
        key = frozenset(cand)
        if key in tried:
            continue
        tried.add(key)
        w = make_wat(A, *cand)
        if w is not None:
            return w
    w = find_one_wat(A)
    if w is None:
        raise RuntimeError("internal invariant violation: a weighted "
                           "asteroidal triple is guaranteed here but none "
                           "was found")
    return w


def _layers_checked(A: SymMatrix, root):
    """Steps shared by both roots: layers, coverage, star checks.

    Returns (psi, outcome or None): a Wat or StronglyHomogeneous
    outcome ends the pipeline; None means the last layer is a
    singleton and the pipeline continues.
    """
    psi = similarity_layers(A, root)
    if not psi.covered:
        return psi, Wat(wat_from_noncover(A, psi))
    w = check_layer_stars(A, psi)
    if w is not None:
        return psi, Wat(w)
    last = psi.layers[psi.k]
    if len(last) >= 2:
        return psi, StronglyHomogeneous(last)
    return psi, None


def certify_with_critical(A: SymMatrix, a) -> CertifyOutcome:
    """Certify a matrix whose element a is known to be critical."""
    if not is_critical(A, a):
        raise ValueError(f"element {a!r} is not critical")
    n = A.n
    if n <= 2:
        order = (a,) + tuple(x for x in A.labels if x != a)
        return CompatibleOrdering(Ordering(order))

    psi_a, out = _layers_checked(A, a)
    if out is not None:
        return out
    k = psi_a.k
    b = psi_a.layers[k][0]
    assert is_critical(A, b)

    psi_b, out = _layers_checked(A, b)
    if out is not None:
        return out

    la = psi_a.layer_index
    lb = psi_b.layer_index

    # two singleton-ended layer structures must run in opposite
    # directions; a pair ordered the same way in both is an obstruction
    for x in A.labels:
        for y in A.labels:
            if x != y and la(x) < la(y) and lb(x) < lb(y):
                return Wat(_wat_from_candidates(A, [(a, b, y)]))
    assert psi_b.layers[psi_b.k] == (a,)

    X_km1 = psi_a.layers[k - 1]
    jstar = max(lb(x) for x in X_km1)
    assert jstar >= 1
    C = tuple(x for x in X_km1 if lb(x) == jstar)
    if len(C) >= 2:
        assert is_strongly_homogeneous(A, C)
        return StronglyHomogeneous(C)
    c = C[0]

    X = set(x for x in A.labels if la(x) <= k - 2)
    Y = set(x for x in A.labels if lb(x) <= jstar - 1)
    assert not (X & Y) and c not in (X | Y)
    assert len(X) + len(Y) + 1 == n

    band = A.max_band() + 1

    def side_matrix(part: set, other_layer) -> SymMatrix:
        keep = [x for x in A.labels if x in part or x == c]

        def entry(u, w):
            if u == c:
                return transformed(-other_layer(w), A.value(c, w), band)
            if w == c:
                return transformed(-other_layer(u), A.value(c, u), band)
            return A.value(u, w)

        return SymMatrix.from_function(keep, entry)

    AX = side_matrix(X, lb)
    AY = side_matrix(Y, la)
    assert AX.n < n and AY.n < n
    if __debug__:
        assert is_critical(AX, a) and is_critical(AY, b)
        assert (similarity_layers(AX, a).layers
                == tuple(psi_a.layers[:k - 1]) + ((c,),))
        assert (similarity_layers(AY, b).layers
                == tuple(psi_b.layers[:jstar]) + ((c,),))

    out_x = certify_with_critical(AX, a)
    out_y = certify_with_critical(AY, b)

    if isinstance(out_x, Wat):
        return Wat(_lift_side_wat(A, out_x.wat, lb, c, b))
    if isinstance(out_y, Wat):
        return Wat(_lift_side_wat(A, out_y.wat, la, c, a))
    if isinstance(out_x, StronglyHomogeneous):
        return _lift_side_homogeneous(A, out_x.elements, c)
    if isinstance(out_y, StronglyHomogeneous):
        return _lift_side_homogeneous(A, out_y.elements, c)

    sig_x = out_x.ordering
    sig_y = out_y.ordering
    assert sig_x[0] == a and sig_x[-1] == c
    assert sig_y[0] == b and sig_y[-1] == c
    sigma = Ordering(sig_x.perm + tuple(reversed(sig_y.perm))[1:])
    viol = verify_robinson_ordering(A, sigma)
    if viol is None:
        if __debug__:
            idx = [la(e) for e in sigma]
            assert all(i <= j for i, j in zip(idx, idx[1:]))
        return CompatibleOrdering(sigma)
    x, y, z = viol
    return Wat(_wat_from_candidates(
        A, [(x, y, z), (a, y, z), (b, y, z), (c, y, z)]))


def _lift_side_wat(A: SymMatrix, w: WeightedAsteroidalTriple,
                   other_layer, c, other_root) -> WeightedAsteroidalTriple:
    """Lift a side-matrix WAT to the original matrix.

    Candidates follow the case analysis: the triple itself, then its
    layer-minimal element swapped for the cut element c, then for the
    far root.  The cut element sorts first inside its tie class since
    its side-matrix row was pushed below band.
    """
    tri = sorted((w.x, w.y, w.z),
                 key=lambda e: (other_layer(e), e != c, A.position(e)))
    x, y, z = tri
    return _wat_from_candidates(
        A, [(x, y, z), (c, y, z), (other_root, y, z)])


def _lift_side_homogeneous(A: SymMatrix, S: tuple, c) -> CertifyOutcome:
    """Re-test a side-matrix homogeneous set against the original.

    When the test fails, some pair of S ties at c but dips inside,
    and that pair with c is an obstruction.
    """
    if is_strongly_homogeneous(A, S):
        return StronglyHomogeneous(S)
    cands = []
    for i, x in enumerate(S):
        for xp in S[i + 1:]:
            cx = A.value(c, x)
            if cx == A.value(c, xp) and cx > A.value(x, xp):
                cands.append((x, xp, c))
                break
        if cands:
            break
    return Wat(_wat_from_candidates(A, cands))


def _certify(A: SymMatrix):
    if A.n <= 2:
        return RobinsonOrdering(Ordering(A.labels))
    wit = critical_or_homogeneous(A, A.labels[0])
    if isinstance(wit, CriticalElement):
        out = certify_with_critical(A, wit.element)
        if isinstance(out, Wat):
            assert verify_wat(A, out.wat) is None
            return NotRobinsonian(out.wat)
        if isinstance(out, CompatibleOrdering):
            return RobinsonOrdering(out.ordering)
        S = out.elements
    else:
        S = wit.elements
    sub = restrict(A, S)
    quo, s = contract(A, S)
    r1 = _certify(sub)
    if isinstance(r1, NotRobinsonian):
        # principal-submatrix WATs transfer verbatim
        assert verify_wat(A, r1.wat) is None
        return r1
    r2 = _certify(quo)
    if isinstance(r2, NotRobinsonian):
        assert verify_wat(A, r2.wat) is None
        return r2
    return RobinsonOrdering(merge_orderings(r1.ordering, r2.ordering, s))


def certify(A: SymMatrix):
    """Certify any matrix: a Robinson ordering or a verified WAT.

    Small matrices are Robinson outright.  Otherwise the search for a
    critical element either finds one, feeding certify_with_critical,
    or produces a proper strongly homogeneous set, and the verdict is
    assembled from the restriction and the contraction.  The nested
    recursion is about linear in depth, so the interpreter limit is
    raised for the duration of the call when needed.
    """
    old = sys.getrecursionlimit()
    need = 200 + 20 * A.n
    if need > old:
        sys.setrecursionlimit(need)
    try:
        return _certify(A)
    finally:
        if need > old:
            sys.setrecursionlimit(old)
