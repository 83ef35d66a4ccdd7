"""Certificates and their independent verifiers.

A recognition run ends in one of two certificates: a Robinson ordering,
or a weighted asteroidal triple (WAT) proving no such ordering exists.
A WAT consists of three elements together with three explicit witness
paths, one per pair, each avoiding the third element.  Verification
walks the paths edge by edge against the matrix; it never re-runs any
recognition machinery, so a verifier needs to trust nothing but the
matrix entries and the order comparisons.
"""

from __future__ import annotations

from .avoidance import Path, find_avoiding_path
from .matrix import Ordering, SymMatrix

__all__ = [
    "WeightedAsteroidalTriple", "RobinsonOrdering", "NotRobinsonian",
    "Certificate", "verify_wat", "make_wat",
]


class WeightedAsteroidalTriple:
    """Three elements, pairwise joined by paths avoiding the third."""

    __slots__ = ("x", "y", "z", "p_xy", "p_xz", "p_yz")

    def __init__(self, x, y, z, p_xy: Path, p_xz: Path, p_yz: Path):
        if x == y or y == z or x == z:
            raise ValueError("triple elements must be distinct")
        for path, (a, b, avoided) in ((p_xy, (x, y, z)),
                                      (p_xz, (x, z, y)),
                                      (p_yz, (y, z, x))):
            if path.nodes[0] != a or path.nodes[-1] != b:
                raise ValueError(
                    f"path endpoints {path.nodes[0]!r}..{path.nodes[-1]!r} "
                    f"do not match the declared pair ({a!r}, {b!r})")
            if path.avoided != avoided:
                raise ValueError(
                    f"path avoids {path.avoided!r}, expected {avoided!r}")
        self.x, self.y, self.z = x, y, z
        self.p_xy, self.p_xz, self.p_yz = p_xy, p_xz, p_yz

    @property
    def elements(self) -> frozenset:
        return frozenset((self.x, self.y, self.z))

    def paths(self) -> tuple[Path, Path, Path]:
        return (self.p_xy, self.p_xz, self.p_yz)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedAsteroidalTriple):
            return NotImplemented
        return ((self.x, self.y, self.z) == (other.x, other.y, other.z)
                and self.paths() == other.paths())

    def __repr__(self) -> str:
        return (f"WeightedAsteroidalTriple({self.x!r}, {self.y!r}, "
                f"{self.z!r})")


class RobinsonOrdering:
    """Positive certificate: the matrix is Robinson in this order."""

    __slots__ = ("ordering",)

    def __init__(self, ordering: Ordering):
        self.ordering = ordering

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RobinsonOrdering):
            return NotImplemented
        return self.ordering == other.ordering

    def __repr__(self) -> str:
        return f"RobinsonOrdering({self.ordering!r})"


class NotRobinsonian:
    """Negative certificate: a weighted asteroidal triple."""

    __slots__ = ("wat",)

    def __init__(self, wat: WeightedAsteroidalTriple):
        self.wat = wat

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NotRobinsonian):
            return NotImplemented
        return self.wat == other.wat

    def __repr__(self) -> str:
        return f"NotRobinsonian({self.wat!r})"


Certificate = RobinsonOrdering | NotRobinsonian


def verify_wat(A: SymMatrix, w: WeightedAsteroidalTriple):
    """Check a WAT against the matrix; None if valid.

    A path avoiding z is valid when every consecutive pair (u, v)
    satisfies A[u,v] > min(A[u,z], A[v,z]).  On failure returns the
    first failing edge as (pair_name, u, v) with pair_name in
    {"xy", "xz", "yz"}.  Structural defects (unknown elements, a path
    whose endpoints or avoided element contradict the triple) raise
    ValueError instead: they mean the certificate is malformed rather
    than merely wrong.
    """
    for e in (w.x, w.y, w.z):
        A.position(e)
    for name, path in (("xy", w.p_xy), ("xz", w.p_xz), ("yz", w.p_yz)):
        z = path.avoided
        for node in path.nodes:
            A.position(node)
        for u, v in zip(path.nodes, path.nodes[1:]):
            if not A.value(u, v) > min(A.value(u, z), A.value(v, z)):
                return (name, u, v)
    return None


def make_wat(A: SymMatrix, x, y, z) -> WeightedAsteroidalTriple | None:
    """Assemble a WAT on {x, y, z} with found paths, or None.

    Returns None as soon as one of the three avoidance relations
    fails; otherwise the result always passes verify_wat.
    """
    if x == y or y == z or x == z:
        raise ValueError("arguments must be distinct")
    p_xy = find_avoiding_path(A, x, y, z)
    if p_xy is None:
        return None
    p_xz = find_avoiding_path(A, x, z, y)
    if p_xz is None:
        return None
    p_yz = find_avoiding_path(A, y, z, x)
    if p_yz is None:
        return None
    w = WeightedAsteroidalTriple(x, y, z, p_xy, p_xz, p_yz)
    assert verify_wat(A, w) is None
    return w
