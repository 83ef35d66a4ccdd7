"""Text file formats and certificate serialization.

Matrix files: a header line "n" followed by n rows of n
whitespace-separated values (decimal or p/q rationals); entry symmetry
is enforced and the diagonal is ignored.  The alternative header
"lower n" is followed by n lower-triangular rows, row i holding i+1
values ending at the (ignored) diagonal.

Graph files: a header "n m" followed by m lines "u v" of 0-based
endpoint indices; loops and duplicate edges are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certificates import (NotRobinsonian, RobinsonOrdering,
                           WeightedAsteroidalTriple, verify_wat)
from .avoidance import Path
from .matrix import Ordering, SymMatrix, verify_robinson_ordering
from .uig import Graph

__all__ = ["parse_matrix", "format_matrix", "parse_graph", "format_graph",
           "certificate_to_json", "certificate_from_json",
           "render_certificate"]


def _parse_value(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad matrix entry {tok!r}") from None


def parse_matrix(text: str) -> SymMatrix:
    """Read either matrix format; raises ValueError on any defect."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0]
    if head[0] == "lower":
        if len(head) != 2:
            raise ValueError('header must be "lower n"')
        n = _parse_size(head[1])
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            toks = lines[i + 1]
            if len(toks) != i + 1:
                raise ValueError(f"row {i} must hold {i + 1} values")
            for j, tok in enumerate(toks):
                v = _parse_value(tok)
                rows[i][j] = v
                rows[j][i] = v
        return SymMatrix.from_rows(rows)
    if len(head) != 1:
        raise ValueError('header must be "n" or "lower n"')
    n = _parse_size(head[0])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i in range(n):
        toks = lines[i + 1]
        if len(toks) != n:
            raise ValueError(f"row {i} must hold {n} values")
        rows.append([_parse_value(tok) for tok in toks])
    return SymMatrix.from_rows(rows)


def _parse_size(tok: str) -> int:
    try:
        n = int(tok)
    except ValueError:
        raise ValueError(f"bad size {tok!r}") from None
    if n < 1:
        raise ValueError("size must be positive")
    return n


def _format_value(v) -> str:
    if v.band != 0:
        raise ValueError("transformed entries cannot be serialized")
    return str(v.primary)


def format_matrix(A: SymMatrix, lower: bool = False) -> str:
    """Serialize with exact rationals; the diagonal is written as 0."""
    n = A.n
    out = []
    if lower:
        out.append(f"lower {n}")
        for i in range(n):
            row = [_format_value(A.value_pos(i, j)) for j in range(i)]
            row.append("0")
            out.append(" ".join(row))
    else:
        out.append(str(n))
        for i in range(n):
            row = ["0" if i == j else _format_value(A.value_pos(i, j))
                   for j in range(n)]
            out.append(" ".join(row))
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError('graph file needs an "n m" header')
    n = _parse_size(lines[0][0])
    try:
        m = int(lines[0][1])
    except ValueError:
        raise ValueError(f"bad edge count {lines[0][1]!r}") from None
    if m < 0 or len(lines) != m + 1:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen = set()
    edges = []
    for toks in lines[1:]:
        if len(toks) != 2:
            raise ValueError(f"bad edge line {' '.join(toks)!r}")
        try:
            u, w = int(toks[0]), int(toks[1])
        except ValueError:
            raise ValueError(f"bad edge line {' '.join(toks)!r}") from None
        if not (0 <= u < n and 0 <= w < n):
            raise ValueError(f"edge ({u}, {w}) out of range")
        if u == w:
            raise ValueError(f"loop edge at {u}")
        key = frozenset((u, w))
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {w})")
        seen.add(key)
        edges.append((u, w))
    return Graph(range(n), edges)


def format_graph(G: Graph) -> str:
    edges = G.edges()
    out = [f"{G.n} {len(edges)}"]
    for u, w in edges:
        out.append(f"{G.position(u)} {G.position(w)}")
    return "\n".join(out) + "\n"


def render_certificate(cert) -> str:
    """Line-oriented human-readable certificate text."""
    if isinstance(cert, RobinsonOrdering):
        return ("Robinson ordering: "
                + " ".join(str(x) for x in cert.ordering) + "\n")
    w = cert.wat
    lines = [f"weighted asteroidal triple: {w.x} {w.y} {w.z}"]
    for p in w.paths():
        nodes = " ".join(str(u) for u in p.nodes)
        lines.append(
            f"path {p.nodes[0]} .. {p.nodes[-1]} avoiding {p.avoided}: "
            f"{nodes}")
    return "\n".join(lines) + "\n"


def certificate_to_json(A: SymMatrix, cert) -> str:
    """JSON text; the verified flag is set only after re-checking the
    certificate against the matrix here."""
    if isinstance(cert, RobinsonOrdering):
        ok = verify_robinson_ordering(A, cert.ordering) is None
        obj = {"kind": "robinson-ordering",
               "order": list(cert.ordering),
               "verified": bool(ok)}
    elif isinstance(cert, NotRobinsonian):
        w = cert.wat
        ok = verify_wat(A, w) is None
        obj = {"kind": "weighted-asteroidal-triple",
               "triple": [w.x, w.y, w.z],
               "paths": [{"ends": [p.nodes[0], p.nodes[-1]],
                          "avoids": p.avoided,
                          "nodes": list(p.nodes)} for p in w.paths()],
               "verified": bool(ok)}
    else:
        raise ValueError(f"not a certificate: {cert!r}")
    return json.dumps(obj, indent=2) + "\n"


def certificate_from_json(text: str):
    """Rebuild a certificate object; structural defects raise
    ValueError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"bad certificate JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ValueError("certificate JSON must be an object")
    kind = obj.get("kind")
    if kind == "robinson-ordering":
        order = obj.get("order")
        if not isinstance(order, list):
            raise ValueError('missing "order" list')
        return RobinsonOrdering(Ordering(order))
    if kind == "weighted-asteroidal-triple":
        triple = obj.get("triple")
        paths = obj.get("paths")
        if (not isinstance(triple, list) or len(triple) != 3
                or not isinstance(paths, list) or len(paths) != 3):
            raise ValueError('need "triple" of 3 and "paths" of 3')
        built = []
        for p in paths:
            if not isinstance(p, dict) or not isinstance(p.get("nodes"), list):
                raise ValueError("bad path record")
            built.append(Path(tuple(p["nodes"]), p.get("avoids")))
        x, y, z = triple
        return NotRobinsonian(
            WeightedAsteroidalTriple(x, y, z, *built))
    raise ValueError(f"unknown certificate kind {kind!r}")
