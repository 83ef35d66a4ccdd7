"""Unit interval graph recognition and typed obstructions.

A graph is a unit interval graph exactly when its adjacency matrix is
Robinsonian, and exactly when it has no induced claw, no induced cycle
of length four or more, and no asteroidal triple.  This module detects
those obstructions directly, converts them to weighted asteroidal
triples of the adjacency matrix, and converts matrix WATs back into
graph obstructions.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .avoidance import Path, find_avoiding_path
from .certificates import WeightedAsteroidalTriple, verify_wat
from .certify import certify
from .certificates import NotRobinsonian, RobinsonOrdering
from .matrix import Ordering, SymMatrix

__all__ = [
    "Graph", "Claw", "ChordlessCycle", "AsteroidalTriple",
    "GraphObstruction", "adjacency_matrix", "verify_graph_obstruction",
    "find_graph_obstruction", "obstruction_to_wat", "wat_to_obstruction",
    "is_unit_interval",
]


class Graph:
    """Simple undirected graph with ordered vertex labels."""

    __slots__ = ("_vertices", "_pos", "_adj")

    def __init__(self, vertices: Sequence, edges: Iterable):
        self._vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self._vertices)}
        if len(self._pos) != len(self._vertices):
            raise ValueError("vertices must be distinct")
        adj = {v: set() for v in self._vertices}
        for e in edges:
            u, w = e
            if u == w:
                raise ValueError(f"loop edge at {u!r}")
            if u not in self._pos or w not in self._pos:
                raise ValueError(f"edge {e!r} touches an unknown vertex")
            adj[u].add(w)
            adj[w].add(u)
        self._adj = {v: tuple(sorted(ns, key=self._pos.__getitem__))
                     for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    def position(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def __contains__(self, v) -> bool:
        return v in self._pos

    def neighbors(self, v) -> tuple:
        return self._adj[v]

    def has_edge(self, u, w) -> bool:
        return w in self._adj[u]

    def edges(self) -> list[tuple]:
        out = []
        for v in self._vertices:
            for w in self._adj[v]:
                if self._pos[v] < self._pos[w]:
                    out.append((v, w))
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={sum(len(a) for a in self._adj.values()) // 2})"


class Claw:
    """Induced K_{1,3}: a center adjacent to three pairwise non-adjacent leaves."""

    __slots__ = ("center", "leaves")

    def __init__(self, center, leaves: tuple):
        self.center = center
        self.leaves = tuple(leaves)
        if len(self.leaves) != 3 or len(set(self.leaves)) != 3:
            raise ValueError("a claw has exactly three distinct leaves")

    def __repr__(self) -> str:
        return f"Claw(center={self.center!r}, leaves={list(self.leaves)!r})"


class ChordlessCycle:
    """Induced cycle on four or more vertices, listed in cyclic order."""

    __slots__ = ("cycle",)

    def __init__(self, cycle: Sequence):
        self.cycle = tuple(cycle)
        if len(self.cycle) < 4 or len(set(self.cycle)) != len(self.cycle):
            raise ValueError("need at least four distinct cycle vertices")

    def __repr__(self) -> str:
        return f"ChordlessCycle({list(self.cycle)!r})"


class AsteroidalTriple:
    """Independent triple joined pairwise by paths missing the third's
    closed neighborhood."""

    __slots__ = ("x", "y", "z", "p_xy", "p_xz", "p_yz")

    def __init__(self, x, y, z, p_xy: tuple, p_xz: tuple, p_yz: tuple):
        self.x, self.y, self.z = x, y, z
        self.p_xy = tuple(p_xy)
        self.p_xz = tuple(p_xz)
        self.p_yz = tuple(p_yz)

    def __repr__(self) -> str:
        return f"AsteroidalTriple({self.x!r}, {self.y!r}, {self.z!r})"


GraphObstruction = Claw | ChordlessCycle | AsteroidalTriple


def adjacency_matrix(G: Graph) -> SymMatrix:
    """0/1 similarity matrix of the graph, 1 exactly on edges."""
    return SymMatrix.from_function(
        G.vertices, lambda u, w: 1 if G.has_edge(u, w) else 0)


def _misses(G: Graph, nodes: tuple, z) -> bool:
    # disjoint from the closed neighborhood of z
    return all(u != z and not G.has_edge(u, z) for u in nodes)


def _is_graph_path(G: Graph, nodes: tuple) -> bool:
    if len(set(nodes)) != len(nodes):
        return False
    return all(G.has_edge(u, w) for u, w in zip(nodes, nodes[1:]))


def verify_graph_obstruction(G: Graph, o) -> str | None:
    """None when the obstruction is genuine, else a failure description."""
    if isinstance(o, Claw):
        for v in (o.center, *o.leaves):
            if v not in G:
                return f"unknown vertex {v!r}"
        for leaf in o.leaves:
            if not G.has_edge(o.center, leaf):
                return f"center not adjacent to leaf {leaf!r}"
        ls = o.leaves
        for i in range(3):
            for j in range(i + 1, 3):
                if G.has_edge(ls[i], ls[j]):
                    return f"leaves {ls[i]!r}, {ls[j]!r} are adjacent"
        return None
    if isinstance(o, ChordlessCycle):
        cyc = o.cycle
        for v in cyc:
            if v not in G:
                return f"unknown vertex {v!r}"
        L = len(cyc)
        for i in range(L):
            if not G.has_edge(cyc[i], cyc[(i + 1) % L]):
                return f"missing cycle edge {cyc[i]!r}-{cyc[(i + 1) % L]!r}"
        for i in range(L):
            for j in range(i + 2, L):
                if i == 0 and j == L - 1:
                    continue
                if G.has_edge(cyc[i], cyc[j]):
                    return f"chord {cyc[i]!r}-{cyc[j]!r}"
        return None
    if isinstance(o, AsteroidalTriple):
        tri = (o.x, o.y, o.z)
        if len(set(tri)) != 3:
            return "triple elements repeat"
        for v in tri:
            if v not in G:
                return f"unknown vertex {v!r}"
        for i in range(3):
            for j in range(i + 1, 3):
                if G.has_edge(tri[i], tri[j]):
                    return f"triple pair {tri[i]!r}-{tri[j]!r} adjacent"
        for nodes, (s, t, far) in ((o.p_xy, (o.x, o.y, o.z)),
                                   (o.p_xz, (o.x, o.z, o.y)),
                                   (o.p_yz, (o.y, o.z, o.x))):
            if not nodes or nodes[0] != s or nodes[-1] != t:
                return f"path endpoints do not match {s!r}..{t!r}"
            if not _is_graph_path(G, nodes):
                return f"not a path of the graph: {list(nodes)!r}"
            if not _misses(G, nodes, far):
                return f"path touches the closed neighborhood of {far!r}"
        return None
    return f"unknown obstruction type {type(o).__name__}"


def _bfs_path(G: Graph, allowed: set, src, dst) -> tuple | None:
    # shortest path inside `allowed`, neighbor scan in position order
    if src not in allowed or dst not in allowed:
        return None
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            nodes = []
            while u is not None:
                nodes.append(u)
                u = parent[u]
            return tuple(reversed(nodes))
        for w in G.neighbors(u):
            if w in allowed and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _find_claw(G: Graph) -> Claw | None:
    for center in G.vertices:
        ns = G.neighbors(center)
        d = len(ns)
        for i in range(d):
            for j in range(i + 1, d):
                if G.has_edge(ns[i], ns[j]):
                    continue
                for t in range(j + 1, d):
                    if (not G.has_edge(ns[i], ns[t])
                            and not G.has_edge(ns[j], ns[t])):
                        return Claw(center, (ns[i], ns[j], ns[t]))
    return None


def _mcs_elimination(G: Graph) -> list:
    # maximum cardinality search; reversal of the pick order is the
    # candidate perfect elimination order
    weight = {v: 0 for v in G.vertices}
    picked = []
    unpicked = set(G.vertices)
    while unpicked:
        v = max(sorted(unpicked, key=G.position),
                key=lambda u: weight[u])
        picked.append(v)
        unpicked.remove(v)
        for w in G.neighbors(v):
            if w in unpicked:
                weight[w] += 1
    return list(reversed(picked))


def _peo_failure(G: Graph, elim: list):
    # first vertex whose later neighbors are not dominated by the
    # earliest of them; returns (v, u, w) with u, w non-adjacent
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [w for w in G.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and not G.has_edge(u, w):
                return (v, u, w)
    return None


def _cycle_through(G: Graph, v, u, w) -> ChordlessCycle | None:
    # u, w are non-adjacent neighbors of v; a u-w path whose interior
    # avoids N[v] closes an induced cycle with v
    allowed = set(G.vertices) - set(G.neighbors(v)) - {v}
    allowed.add(u)
    allowed.add(w)
    path = _bfs_path(G, allowed, u, w)
    if path is None:
        return None
    cyc = ChordlessCycle((v,) + path)
    assert verify_graph_obstruction(G, cyc) is None
    return cyc


def _find_chordless_cycle(G: Graph) -> ChordlessCycle | None:
    elim = _mcs_elimination(G)
    fail = _peo_failure(G, elim)
    if fail is None:
        return None
    cyc = _cycle_through(G, *fail)
    if cyc is not None:
        return cyc
    # some (v, u, w) must close a cycle; any induced cycle's own
    # vertices provide one
    for v in G.vertices:
        ns = G.neighbors(v)
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                if G.has_edge(ns[i], ns[j]):
                    continue
                cyc = _cycle_through(G, v, ns[i], ns[j])
                if cyc is not None:
                    return cyc
    raise RuntimeError("internal invariant violation: elimination order "
                       "failed but no induced cycle was found")


def _noneighbor_components(G: Graph, z) -> dict:
    # component id of every vertex outside the closed neighborhood of z
    allowed = set(G.vertices) - set(G.neighbors(z)) - {z}
    comp = {}
    cid = 0
    for s in G.vertices:
        if s not in allowed or s in comp:
            continue
        comp[s] = cid
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in G.neighbors(a):
                if b in allowed and b not in comp:
                    comp[b] = cid
                    queue.append(b)
        cid += 1
    return comp


def _find_asteroidal_triple(G: Graph) -> AsteroidalTriple | None:
    comp = {z: _noneighbor_components(G, z) for z in G.vertices}
    verts = G.vertices
    n = len(verts)
    for i in range(n):
        x = verts[i]
        for j in range(i + 1, n):
            y = verts[j]
            if G.has_edge(x, y):
                continue
            for k in range(j + 1, n):
                z = verts[k]
                if G.has_edge(x, z) or G.has_edge(y, z):
                    continue
                cz, cy, cx = comp[z], comp[y], comp[x]
                if (cz.get(x) == cz.get(y) and cy.get(x) == cy.get(z)
                        and cx.get(y) == cx.get(z)):
                    def outside(far):
                        return (set(verts) - set(G.neighbors(far))
                                - {far})
                    p_xy = _bfs_path(G, outside(z), x, y)
                    p_xz = _bfs_path(G, outside(y), x, z)
                    p_yz = _bfs_path(G, outside(x), y, z)
                    at = AsteroidalTriple(x, y, z, p_xy, p_xz, p_yz)
                    assert verify_graph_obstruction(G, at) is None
                    return at
    return None


def find_graph_obstruction(G: Graph):
    """A verified claw, chordless cycle, or asteroidal triple; None
    iff the graph is a unit interval graph.

    Checked in that fixed order: claws by scanning each vertex's
    non-adjacent neighbor triples, chordality by maximum cardinality
    search with elimination-order verification and cycle extraction,
    then asteroidal triples via per-vertex neighborhood-deleted
    components.
    """
    claw = _find_claw(G)
    if claw is not None:
        return claw
    cyc = _find_chordless_cycle(G)
    if cyc is not None:
        return cyc
    return _find_asteroidal_triple(G)


def obstruction_to_wat(G: Graph, o) -> WeightedAsteroidalTriple:
    """Map a verified graph obstruction to a WAT of the adjacency
    matrix.

    A cycle (x1, ..., xk) gives the triple {x1, x2, xk}: the direct
    edges serve as two of the paths and the long way around avoids x1.
    A claw's leaves connect pairwise through the center.  An
    asteroidal triple's missing paths are avoiding paths as they
    stand.
    """
    reason = verify_graph_obstruction(G, o)
    if reason is not None:
        raise ValueError(f"obstruction does not verify: {reason}")
    A = adjacency_matrix(G)
    if isinstance(o, Claw):
        x, y, z = o.leaves
        u = o.center
        w = WeightedAsteroidalTriple(
            x, y, z,
            Path((x, u, y), z), Path((x, u, z), y), Path((y, u, z), x))
    elif isinstance(o, ChordlessCycle):
        x1, x2, xk = o.cycle[0], o.cycle[1], o.cycle[-1]
        w = WeightedAsteroidalTriple(
            x1, x2, xk,
            Path((x1, x2), xk), Path((x1, xk), x2),
            Path(o.cycle[1:], x1))
    else:
        w = WeightedAsteroidalTriple(
            o.x, o.y, o.z,
            Path(o.p_xy, o.z), Path(o.p_xz, o.y), Path(o.p_yz, o.x))
    assert verify_wat(A, w) is None
    return w


def _classify_minimal_path(G: Graph, nodes: tuple, z):
    """Lemma-style trichotomy for one minimal avoiding path.

    Returns one of ("miss", None), ("cycle", ChordlessCycle),
    ("claw", Claw), ("attach", endpoint), ("stuck", None).  "attach"
    means z is adjacent to exactly that endpoint of the path; "stuck"
    is the diamond configuration the cycle extraction cannot use.
    """
    zadj = [i for i, u in enumerate(nodes) if G.has_edge(u, z)]
    if not zadj:
        return ("miss", None)
    if len(zadj) >= 2:
        stuck = False
        for t in range(len(zadj) - 1):
            i, j = zadj[t], zadj[t + 1]
            # consecutive path nodes cannot both touch z on 0/1 entries
            assert j - i >= 2
            if not G.has_edge(nodes[i], nodes[j]):
                return ("cycle", ChordlessCycle((z,) + nodes[i:j + 1]))
            if j - i >= 3:
                return ("cycle", ChordlessCycle(nodes[i:j + 1]))
            stuck = True
        if stuck:
            return ("stuck", None)
    i = zadj[0]
    if 0 < i < len(nodes) - 1:
        return ("claw", Claw(nodes[i], (nodes[i - 1], nodes[i + 1], z)))
    return ("attach", nodes[i])


def _splice_cycle(G: Graph, P: tuple, Q: tuple) -> tuple | None:
    """Shorten the closed walk e..o (P) + o..t (Q) + edge t-e by the
    first cross chord; None when no chord exists."""
    posQ = {q: idx for idx, q in enumerate(Q)}
    r = len(P) - 1
    s = len(Q) - 1
    for i, p in enumerate(P):
        best = None
        for j in range(s, -1, -1):
            q = Q[j]
            if p == q or not G.has_edge(p, q):
                continue
            if i == r and j == 1:
                continue  # consecutive through o
            if i == 0 and j == s:
                continue  # the closing edge itself
            best = j
            break
        if best is not None:
            return P[:i + 1] + Q[best:]
    return None


def wat_to_obstruction(G: Graph, w: WeightedAsteroidalTriple):
    """Map a WAT of the adjacency matrix back to a graph obstruction.

    Re-derives the three avoiding paths minimally, classifies each,
    and assembles a claw, an induced cycle (directly or by closing a
    mixed pair of paths, shortened along a cross chord), or the
    asteroidal triple when all three paths miss.  Whenever the guided
    construction does not verify, falls back to the direct obstruction
    search, which must succeed since a verified WAT rules the class
    out.
    """
    A = adjacency_matrix(G)
    if verify_wat(A, w) is not None:
        raise ValueError("the triple does not verify against the graph's "
                         "adjacency matrix")

    def fallback():
        o = find_graph_obstruction(G)
        if o is None:
            raise RuntimeError("internal invariant violation: a verified "
                               "WAT exists but no graph obstruction was "
                               "found")
        return o

    tri = {}
    for pair, far in (((w.x, w.y), w.z), ((w.x, w.z), w.y),
                      ((w.y, w.z), w.x)):
        p = find_avoiding_path(A, pair[0], pair[1], far)
        if p is None:
            return fallback()
        tri[pair] = (p.nodes, far)

    outcomes = []
    for pair, (nodes, far) in tri.items():
        kind, payload = _classify_minimal_path(G, nodes, far)
        if kind in ("cycle", "claw"):
            if verify_graph_obstruction(G, payload) is None:
                return payload
            return fallback()
        outcomes.append((pair, nodes, far, kind, payload))

    if all(kind == "miss" for (_, _, _, kind, _) in outcomes):
        at = AsteroidalTriple(
            w.x, w.y, w.z,
            tri[(w.x, w.y)][0], tri[(w.x, w.z)][0], tri[(w.y, w.z)][0])
        if verify_graph_obstruction(G, at) is None:
            return at
        return fallback()

    for pair, nodes, far, kind, endpoint in outcomes:
        if kind != "attach":
            continue
        # far is adjacent to `endpoint`; companion joins the other
        # endpoint to far while avoiding `endpoint`
        e = endpoint
        o = nodes[-1] if nodes[0] == e else nodes[0]
        P = nodes if nodes[0] == e else tuple(reversed(nodes))
        want = {o, far}
        comp_key = next(k for k in tri if set(k) == want)
        comp_nodes, _ = tri[comp_key]
        Q = comp_nodes if comp_nodes[0] == o else tuple(reversed(comp_nodes))
        if set(P) & set(Q) != {o}:
            return fallback()
        cycle = P + Q[1:]
        cand = None
        if len(cycle) >= 4:
            cand = ChordlessCycle(cycle)
            if verify_graph_obstruction(G, cand) is None:
                return cand
        spliced = _splice_cycle(G, P, Q)
        if spliced is not None and len(spliced) >= 4 \
                and len(set(spliced)) == len(spliced):
            cand = ChordlessCycle(spliced)
            if verify_graph_obstruction(G, cand) is None:
                return cand
        return fallback()
    return fallback()


def is_unit_interval(G: Graph):
    """An ordering meeting the 3-vertex condition, or an obstruction.

    Runs the matrix certifier on the adjacency matrix; an ordering
    transfers as-is, a WAT is translated to a typed obstruction.
    """
    if G.n == 0:
        return Ordering(())
    out = certify(adjacency_matrix(G))
    if isinstance(out, RobinsonOrdering):
        return out.ordering
    return wat_to_obstruction(G, out.wat)
