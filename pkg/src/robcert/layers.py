"""Similarity layer structures rooted at an element.

Layer X_0 is the root alone; each next layer collects the elements
most similar to everything placed so far: X_i holds the unplaced y
maximizing A[x, .] over unplaced candidates simultaneously for every
placed x.  The construction can stall before covering all elements;
with a critical root, both a stall and a failure of the starred layer
inequalities each yield an explicit weighted asteroidal triple
containing the root.
"""

from __future__ import annotations

from .avoidance import is_critical
from .certificates import WeightedAsteroidalTriple, make_wat
from .decomposition import is_strongly_homogeneous
from .matrix import SymMatrix

__all__ = [
    "LayerStructure", "similarity_layers", "wat_from_noncover",
    "check_layer_stars",
]


class LayerStructure:
    """Ordered layers (X_0, ..., X_k) grown from a root element."""

    __slots__ = ("root", "layers", "covered", "_index")

    def __init__(self, root, layers: tuple, covered: bool):
        self.root = root
        self.layers = layers
        self.covered = covered
        self._index = {x: i for i, layer in enumerate(layers) for x in layer}

    @property
    def k(self) -> int:
        return len(self.layers) - 1

    def layer_index(self, x) -> int | None:
        """Index of x's layer, or None for elements never placed."""
        return self._index.get(x)

    def placed(self) -> tuple:
        return tuple(self._index)

    def precedes(self, x, y) -> bool:
        """Strict layer order: x in an earlier layer than y."""
        i, j = self._index[x], self._index[y]
        return i < j

    def __repr__(self) -> str:
        return (f"LayerStructure(root={self.root!r}, "
                f"layers={[list(l) for l in self.layers]!r}, "
                f"covered={self.covered})")


def similarity_layers(A: SymMatrix, a) -> LayerStructure:
    """Grow layers from a until no candidate qualifies or V is covered.

    An unplaced y enters the next layer iff for every placed x its
    value A[x,y] attains max over all unplaced z of A[x,z].
    """
    A.position(a)
    layers = [(a,)]
    placed = [a]
    rest = [x for x in A.labels if x != a]
    while rest:
        maxima = [max(A.value(x, z) for z in rest) for x in placed]
        nxt = [y for y in rest
               if all(A.value(x, y) == m for x, m in zip(placed, maxima))]
        if not nxt:
            break
        layers.append(tuple(nxt))
        placed.extend(nxt)
        keep = set(nxt)
        rest = [x for x in rest if x not in keep]
    return LayerStructure(a, tuple(layers), not rest)


def _require_critical_root(A: SymMatrix, psi: LayerStructure) -> None:
    if not is_critical(A, psi.root):
        raise ValueError("layer root is not critical")


def wat_from_noncover(A: SymMatrix, psi: LayerStructure
                      ) -> WeightedAsteroidalTriple:
    """Turn a coverage failure under a critical root into a WAT.

    For placed x let M_x be the set of unplaced elements maximizing
    A[x, .].  Some two placed elements must have incomparable M-sets
    (a chain would extend the layers); picking u from one difference
    and v from the other yields the triple {root, u, v}.
    """
    _require_critical_root(A, psi)
    if psi.covered:
        raise ValueError("layer structure covers every element")
    placed = [x for x in A.labels if psi.layer_index(x) is not None]
    outside = [x for x in A.labels if psi.layer_index(x) is None]
    msets = {}
    for x in placed:
        best = max(A.value(x, v) for v in outside)
        msets[x] = frozenset(v for v in outside if A.value(x, v) == best)
    for i, x in enumerate(placed):
        for xp in placed[i + 1:]:
            left = msets[x] - msets[xp]
            right = msets[xp] - msets[x]
            if left and right:
                u = min(left, key=A.position)
                v = min(right, key=A.position)
                w = make_wat(A, psi.root, u, v)
                if w is None:
                    raise RuntimeError(
                        "internal invariant violation: noncover triple "
                        "lost a witness path")
                return w
    raise RuntimeError("internal invariant violation: all maximizer sets "
                       "form a chain despite a coverage failure")


def check_layer_stars(A: SymMatrix, psi: LayerStructure
                      ) -> WeightedAsteroidalTriple | None:
    """Scan the starred layer inequalities; a violation makes a WAT.

    For x in an earlier layer than y and z: equal-layer y, z must
    satisfy A[x,y] = A[x,z] <= A[y,z], and for y strictly between x
    and z in layer order A[x,z] <= min(A[x,y], A[y,z]).  Either
    failure yields the triple {root, y, z}.  Scans run in layer-index
    order with position tie-breaks, first the equal-layer inequality,
    then the three-layer one; None means all inequalities hold, and
    then a last layer of size >= 2 is strongly homogeneous.
    """
    _require_critical_root(A, psi)
    if not psi.covered:
        raise ValueError("layer structure does not cover every element")
    a = psi.root
    L = psi.layers
    k = psi.k
    for i in range(k):
        for j in range(i + 1, k + 1):
            for x in L[i]:
                for t, y in enumerate(L[j]):
                    for z in L[j][t + 1:]:
                        xy = A.value(x, y)
                        assert xy == A.value(x, z)
                        if xy > A.value(y, z):
                            w = make_wat(A, a, y, z)
                            if w is None:
                                raise RuntimeError(
                                    "internal invariant violation: "
                                    "equal-layer triple lost a witness")
                            return w
    for i in range(k - 1):
        for j in range(i + 1, k):
            for h in range(j + 1, k + 1):
                for x in L[i]:
                    for y in L[j]:
                        for z in L[h]:
                            xz = A.value(x, z)
                            assert xz <= A.value(x, y)
                            if A.value(y, z) < xz:
                                w = make_wat(A, a, y, z)
                                if w is None:
                                    raise RuntimeError(
                                        "internal invariant violation: "
                                        "between-layer triple lost a "
                                        "witness")
                                return w
    if len(L[k]) >= 2:
        assert is_strongly_homogeneous(A, L[k])
    return None
