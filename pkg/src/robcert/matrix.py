"""Symmetric labeled matrices and the Robinson predicates.

A SymMatrix stores the strict upper triangle of a symmetric matrix over
EntryValue, indexed by an ordered list of element labels.  Diagonal
entries are never stored or consulted; every predicate here uses order
comparisons only, so verdicts are invariant under strictly increasing
entrywise maps.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .values import EntryValue, from_rational

__all__ = [
    "SymMatrix", "Ordering",
    "is_robinson_triple", "verify_robinson_ordering", "permute", "restrict",
]


def _coerce(v) -> EntryValue:
    if isinstance(v, EntryValue):
        return v
    return from_rational(v)


class SymMatrix:
    """Dense symmetric matrix over EntryValue with labeled rows.

    Construct with `from_function` or `from_rows`; instances are
    immutable after construction.
    """

    __slots__ = ("_labels", "_pos", "_flat")

    def __init__(self, labels: Sequence, flat: list):
        self._labels = tuple(labels)
        if not self._labels:
            raise ValueError("at least one label required")
        self._pos = {x: i for i, x in enumerate(self._labels)}
        if len(self._pos) != len(self._labels):
            raise ValueError("labels must be distinct")
        n = len(self._labels)
        if len(flat) != n * (n - 1) // 2:
            raise ValueError("entry count does not match label count")
        self._flat = flat

    @classmethod
    def from_function(cls, labels: Sequence, fn) -> "SymMatrix":
        """Build from fn(x, y) evaluated once per unordered label pair.

        fn may return EntryValue or anything from_rational accepts.
        """
        labels = tuple(labels)
        flat = []
        for i, x in enumerate(labels):
            for y in labels[i + 1:]:
                flat.append(_coerce(fn(x, y)))
        return cls(labels, flat)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], labels: Sequence | None = None
                  ) -> "SymMatrix":
        """Build from a full square table; the diagonal is discarded.

        Raises ValueError if the table is not exactly symmetric.
        """
        n = len(rows)
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError("label count does not match row count")
        if any(len(r) != n for r in rows):
            raise ValueError("rows must form a square table")
        flat = []
        for i in range(n):
            for j in range(i + 1, n):
                v = _coerce(rows[i][j])
                if v != _coerce(rows[j][i]):
                    raise ValueError(
                        f"asymmetric entries at positions ({i},{j})")
                flat.append(v)
        return cls(labels, flat)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple:
        return self._labels

    def position(self, x) -> int:
        try:
            return self._pos[x]
        except KeyError:
            raise ValueError(f"unknown element {x!r}") from None

    def __contains__(self, x) -> bool:
        return x in self._pos

    def _idx(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        n = len(self._labels)
        return i * (n - 1) - i * (i - 1) // 2 + (j - i - 1)

    def value_pos(self, i: int, j: int) -> EntryValue:
        """Entry at position pair (i, j), i != j."""
        if i == j:
            raise ValueError("diagonal entries do not exist")
        return self._flat[self._idx(i, j)]

    def value(self, x, y) -> EntryValue:
        """Entry for the label pair (x, y), x != y."""
        return self.value_pos(self.position(x), self.position(y))

    def iter_values(self) -> Iterable[EntryValue]:
        """All strict-upper-triangle entries, row-major."""
        return iter(self._flat)

    def max_band(self) -> int:
        """Deepest transformation band present among the entries."""
        return max((v.band for v in self._flat), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._labels == other._labels and self._flat == other._flat

    def __hash__(self):
        return hash((self._labels, tuple(self._flat)))

    def __repr__(self) -> str:
        return f"SymMatrix(n={self.n}, labels={self._labels!r})"


class Ordering:
    """A permutation of a matrix's labels, listed left to right."""

    __slots__ = ("_perm",)

    def __init__(self, perm: Sequence):
        self._perm = tuple(perm)
        if len(set(self._perm)) != len(self._perm):
            raise ValueError("ordering repeats an element")

    @property
    def perm(self) -> tuple:
        return self._perm

    def __iter__(self):
        return iter(self._perm)

    def __len__(self) -> int:
        return len(self._perm)

    def __getitem__(self, i):
        return self._perm[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self._perm == other._perm

    def __hash__(self) -> int:
        return hash(self._perm)

    def __repr__(self) -> str:
        return f"Ordering({list(self._perm)!r})"


def _check_triple(A: SymMatrix, x, y, z) -> None:
    if x == y or y == z or x == z:
        raise ValueError("triple elements must be distinct")
    for e in (x, y, z):
        A.position(e)


def is_robinson_triple(A: SymMatrix, x, y, z) -> bool:
    """True iff A[x,z] <= min(A[x,y], A[y,z])."""
    _check_triple(A, x, y, z)
    xz = A.value(x, z)
    return xz <= A.value(x, y) and xz <= A.value(y, z)


def _check_perm(A: SymMatrix, sigma: Ordering) -> list[int]:
    if len(sigma) != A.n or set(sigma.perm) != set(A.labels):
        raise ValueError("ordering is not a permutation of the labels")
    return [A.position(x) for x in sigma]


def verify_robinson_ordering(A: SymMatrix, sigma: Ordering):
    """Check sigma for the Robinson property in O(n^2) comparisons.

    Returns None when every sigma-ordered triple (x, y, z) satisfies
    A[x,z] <= min(A[x,y], A[y,z]), else one violating triple in sigma
    order.  The quadratic scan relies on the standard equivalence: the
    ordering is Robinson iff each row weakly increases toward the
    diagonal from both sides, i.e. B[i,k] <= B[i,k-1] and
    B[i,k] <= B[i+1,k] for all i < k - 1 in permuted positions.
    """
    pos = _check_perm(A, sigma)
    n = A.n
    for i in range(n):
        for k in range(i + 2, n):
            ik = A.value_pos(pos[i], pos[k])
            if ik > A.value_pos(pos[i], pos[k - 1]):
                return (sigma[i], sigma[k - 1], sigma[k])
            if ik > A.value_pos(pos[i + 1], pos[k]):
                return (sigma[i], sigma[i + 1], sigma[k])
    return None


def permute(A: SymMatrix, sigma: Ordering) -> SymMatrix:
    """Relabel rows and columns so sigma becomes the identity order."""
    _check_perm(A, sigma)
    return SymMatrix.from_function(sigma.perm, A.value)


def restrict(A: SymMatrix, S: Iterable) -> SymMatrix:
    """Principal submatrix on the elements of S, label order inherited."""
    S = set(S)
    for x in S:
        A.position(x)
    keep = [x for x in A.labels if x in S]
    if len(keep) != len(S):
        raise ValueError("restriction set repeats elements")
    if not keep:
        raise ValueError("restriction set is empty")
    return SymMatrix.from_function(keep, A.value)
