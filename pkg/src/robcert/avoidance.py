"""Paths avoiding an element, and the per-pivot avoidance graphs.

For a pivot v, the graph H_v has vertex set V minus v and an edge
{u, w} exactly when A[u,w] > min(A[u,v], A[w,v]), i.e. when the triple
(u, v, w) is not Robinson.  A path avoiding v is a path of H_v; the
relation "x and y are joined by a path avoiding v" is connectivity in
H_v.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .matrix import SymMatrix

__all__ = [
    "AvoidanceGraph", "Path",
    "build_avoidance_graph", "avoids_path_exists", "find_avoiding_path",
    "is_critical",
]


class Path:
    """A sequence of distinct elements walking through H_(avoided)."""

    __slots__ = ("_nodes", "_avoided")

    def __init__(self, nodes: Sequence, avoided):
        self._nodes = tuple(nodes)
        if not self._nodes:
            raise ValueError("path needs at least one node")
        if len(set(self._nodes)) != len(self._nodes):
            raise ValueError("path repeats a node")
        if avoided in self._nodes:
            raise ValueError("avoided element appears on the path")
        self._avoided = avoided

    @property
    def nodes(self) -> tuple:
        return self._nodes

    @property
    def avoided(self):
        return self._avoided

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self):
        return iter(self._nodes)

    def __getitem__(self, i):
        return self._nodes[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self._nodes == other._nodes and self._avoided == other._avoided

    def __hash__(self) -> int:
        return hash((self._nodes, self._avoided))

    def __repr__(self) -> str:
        return f"Path({list(self._nodes)!r}, avoided={self._avoided!r})"


class AvoidanceGraph:
    """H_v for one pivot, with adjacency and component structure."""

    __slots__ = ("pivot", "vertices", "_adj", "_comp_id", "components")

    def __init__(self, pivot, vertices: tuple, adj: dict):
        self.pivot = pivot
        self.vertices = vertices
        self._adj = adj
        self._comp_id = {}
        pos = {x: i for i, x in enumerate(vertices)}
        comps = []
        for start in vertices:
            if start in self._comp_id:
                continue
            cid = len(comps)
            self._comp_id[start] = cid
            queue = deque([start])
            members = [start]
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in self._comp_id:
                        self._comp_id[w] = cid
                        members.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(members, key=pos.__getitem__)))
        self.components = tuple(comps)

    def neighbors(self, u) -> tuple:
        return self._adj[u]

    def has_edge(self, u, w) -> bool:
        return w in self._adj[u]

    def same_component(self, x, y) -> bool:
        return self._comp_id[x] == self._comp_id[y]

    def component_of(self, x) -> int:
        return self._comp_id[x]

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def __repr__(self) -> str:
        return (f"AvoidanceGraph(pivot={self.pivot!r}, "
                f"n={len(self.vertices)}, "
                f"components={len(self.components)})")


def build_avoidance_graph(A: SymMatrix, v) -> AvoidanceGraph:
    """Construct H_v in O(n^2) comparisons.

    Vertices keep the matrix's label order; neighbor lists are sorted
    by label position so later traversals are deterministic.
    """
    A.position(v)
    verts = tuple(x for x in A.labels if x != v)
    pivot_col = {u: A.value(u, v) for u in verts}
    adj = {u: [] for u in verts}
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if A.value(u, w) > min(pivot_col[u], pivot_col[w]):
                adj[u].append(w)
                adj[w].append(u)
    return AvoidanceGraph(v, verts, {u: tuple(ns) for u, ns in adj.items()})


def _check_distinct(x, y, z) -> None:
    if x == y or y == z or x == z:
        raise ValueError("arguments must be distinct")


def avoids_path_exists(A: SymMatrix, x, y, z) -> bool:
    """The relation "x is joined to y by a path avoiding z"."""
    _check_distinct(x, y, z)
    for e in (x, y, z):
        A.position(e)
    return build_avoidance_graph(A, z).same_component(x, y)


def find_avoiding_path(A: SymMatrix, x, y, z) -> Path | None:
    """Shortest x-y path in H_z, or None when none exists.

    Breadth-first from x with neighbor lists in label-position order,
    so the same instance always yields the same path.
    """
    _check_distinct(x, y, z)
    for e in (x, y, z):
        A.position(e)
    H = build_avoidance_graph(A, z)
    if not H.same_component(x, y):
        return None
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in H.neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    nodes = []
    u = y
    while u is not None:
        nodes.append(u)
        u = parent[u]
    nodes.reverse()
    return Path(nodes, z)


def is_critical(A: SymMatrix, a) -> bool:
    """True iff every pair of other elements is joined avoiding a.

    Vacuously true when the matrix has at most two labels.
    """
    A.position(a)
    if A.n <= 2:
        return True
    return build_avoidance_graph(A, a).is_connected()
