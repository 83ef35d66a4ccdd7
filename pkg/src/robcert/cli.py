"""Command line surface.

Exit codes are a stable contract: 0 means Robinsonian / no
obstruction / verified, 1 means a certificate of non-membership was
emitted (or a certificate failed its check under `verify`), 2 means
an input or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path as FsPath

from .avoidance import Path
from .certificates import (NotRobinsonian, RobinsonOrdering,
                           WeightedAsteroidalTriple, verify_wat)
from .certify import certify
from .fileio import (certificate_from_json, certificate_to_json,
                     format_graph, format_matrix, parse_graph, parse_matrix,
                     render_certificate)
from .generators import (named_graph, perturbed_matrix, random_matrix,
                         robinson_matrix)
from .matrix import Ordering, verify_robinson_ordering
from .submatrix import enumerate_families, greedy_robinsonian_core
from .uig import (AsteroidalTriple, Claw, ChordlessCycle,
                  find_graph_obstruction, is_unit_interval,
                  verify_graph_obstruction)
from .watenum import count_wats, find_one_wat, wat_triples

NO_WAT = "A has no weighted asteroidal triple"


def _read(path: str) -> str:
    return FsPath(path).read_text()


def _position_sorted(A, w: WeightedAsteroidalTriple
                     ) -> WeightedAsteroidalTriple:
    """Reorder WAT roles so the printed triple follows matrix positions."""
    a, b, c = sorted((w.x, w.y, w.z), key=A.position)
    by_pair = {frozenset((w.x, w.y)): w.p_xy,
               frozenset((w.x, w.z)): w.p_xz,
               frozenset((w.y, w.z)): w.p_yz}

    def oriented(s, t):
        p = by_pair[frozenset((s, t))]
        nodes = p.nodes if p.nodes[0] == s else tuple(reversed(p.nodes))
        return Path(nodes, p.avoided)

    return WeightedAsteroidalTriple(
        a, b, c, oriented(a, b), oriented(a, c), oriented(b, c))


def cmd_certify(args) -> int:
    A = parse_matrix(_read(args.path))
    cert = certify(A)
    if isinstance(cert, NotRobinsonian):
        cert = NotRobinsonian(_position_sorted(A, cert.wat))
    if isinstance(cert, RobinsonOrdering):
        if verify_robinson_ordering(A, cert.ordering) is not None:
            raise RuntimeError("internal invariant violation: emitted "
                               "ordering does not verify")
        code = 0
    else:
        if verify_wat(A, cert.wat) is not None:
            raise RuntimeError("internal invariant violation: emitted "
                               "WAT does not verify")
        code = 1
    if args.json:
        sys.stdout.write(certificate_to_json(A, cert))
    else:
        sys.stdout.write(render_certificate(cert))
    return code


def cmd_wats(args) -> int:
    A = parse_matrix(_read(args.path))
    if args.count:
        m = count_wats(A)
        print(m)
        return 1 if m else 0
    triples = wat_triples(A)
    if not triples:
        print(NO_WAT)
        return 0
    if args.all:
        for t in triples:
            print(" ".join(str(x) for x in t))
    else:
        w = find_one_wat(A)
        print(f"{w.x} {w.y} {w.z}")
    return 1


def cmd_uig(args) -> int:
    G = parse_graph(_read(args.path))
    out = is_unit_interval(G)
    if isinstance(out, Ordering):
        print("3-vertex ordering: " + " ".join(str(v) for v in out))
        return 0
    # report the direct search's obstruction: same typed shapes, but a
    # deterministic pick independent of the certificate route
    verdict = find_graph_obstruction(G)
    if verdict is None or verify_graph_obstruction(G, verdict) is not None:
        raise RuntimeError("internal invariant violation: obstruction "
                           "missing or unverifiable")
    if isinstance(verdict, Claw):
        print(f"claw: center={verdict.center}, "
              f"leaves={' '.join(str(v) for v in verdict.leaves)}")
    elif isinstance(verdict, ChordlessCycle):
        print("chordless cycle: "
              + " ".join(str(v) for v in verdict.cycle))
    else:
        assert isinstance(verdict, AsteroidalTriple)
        print(f"asteroidal triple: {verdict.x} {verdict.y} {verdict.z}")
        for s, t, nodes in ((verdict.x, verdict.y, verdict.p_xy),
                            (verdict.x, verdict.z, verdict.p_xz),
                            (verdict.y, verdict.z, verdict.p_yz)):
            print(f"path {s} .. {t}: "
                  + " ".join(str(v) for v in nodes))
    return 1


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "robinson":
        sys.stdout.write(format_matrix(robinson_matrix(args.n, args.seed)))
    elif kind == "perturbed":
        sys.stdout.write(format_matrix(
            perturbed_matrix(args.n, args.seed, args.swaps)))
    elif kind == "random":
        sys.stdout.write(format_matrix(random_matrix(args.n, args.seed)))
    elif kind.startswith("graph:"):
        sys.stdout.write(format_graph(named_graph(kind[6:], args.n)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return 0


def cmd_verify(args) -> int:
    A = parse_matrix(_read(args.matrix))
    cert = certificate_from_json(_read(args.certificate))
    if isinstance(cert, RobinsonOrdering):
        bad = verify_robinson_ordering(A, cert.ordering)
        if bad is None:
            print("certificate verifies: Robinson ordering")
            return 0
        print(f"ordering fails on triple {bad[0]} {bad[1]} {bad[2]}")
        return 1
    bad = verify_wat(A, cert.wat)
    if bad is None:
        print("certificate verifies: weighted asteroidal triple")
        return 0
    print(f"path {bad[0]} breaks at pair {bad[1]} {bad[2]}")
    return 1


def _subset_sort_key(A, S):
    return (len(S), tuple(sorted(A.position(x) for x in S)))


def cmd_submatrix(args) -> int:
    A = parse_matrix(_read(args.path))
    if args.greedy:
        core = greedy_robinsonian_core(A)
        print("greedy heuristic core (Robinsonian, no maximality "
              "guarantee): " + " ".join(str(x) for x in core))
        return 0
    fam = enumerate_families(A, bound=args.bound)
    for title, family in (
            ("maximal Robinsonian subsets", fam.maximal_robinsonian),
            ("minimal deletion sets", fam.minimal_deletions),
            ("minimal weighted asteroidal cycles", fam.minimal_cycles)):
        print(f"{title}:")
        members = sorted(family, key=lambda S: _subset_sort_key(A, S))
        if not members:
            print("  none")
        for S in members:
            body = " ".join(str(x) for x in sorted(S, key=A.position))
            print("  " + (body if body else "(empty)"))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="robcert",
        description="Certifying recognition of Robinsonian matrices "
                    "and unit interval graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify",
                       help="Robinson ordering or WAT for a matrix file")
    c.add_argument("path")
    c.add_argument("--json", action="store_true",
                   help="emit a machine-readable certificate")
    c.set_defaults(func=cmd_certify)

    w = sub.add_parser("wats", help="enumerate weighted asteroidal triples")
    w.add_argument("path")
    g = w.add_mutually_exclusive_group()
    g.add_argument("--first", action="store_true",
                   help="print one triple (default)")
    g.add_argument("--all", action="store_true",
                   help="print every triple, sorted by positions")
    g.add_argument("--count", action="store_true",
                   help="print only the number of triples")
    w.set_defaults(func=cmd_wats)

    u = sub.add_parser("uig",
                       help="unit interval ordering or obstruction for "
                            "a graph file")
    u.add_argument("path")
    u.set_defaults(func=cmd_uig)

    ge = sub.add_parser("gen", help="generate a test instance on stdout")
    ge.add_argument("kind",
                    help="robinson | perturbed | random | "
                         "graph:{path,cycle,claw,net}")
    ge.add_argument("n", type=int)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--swaps", type=int, default=None,
                    help="entry swaps for the perturbed kind")
    ge.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify",
                       help="check a JSON certificate against a matrix "
                            "file")
    v.add_argument("matrix")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("submatrix",
                       help="Robinsonian submatrix tools")
    s.add_argument("path")
    gg = s.add_mutually_exclusive_group(required=True)
    gg.add_argument("--greedy", action="store_true",
                    help="heuristic Robinsonian element subset")
    gg.add_argument("--enumerate", action="store_true",
                    help="exhaustive subset families (small n only)")
    s.add_argument("--bound", type=int, default=12,
                   help="size cap for --enumerate")
    s.set_defaults(func=cmd_submatrix)
    return p


def _thread_cap() -> int | None:
    """Validate ROBCERT_THREADS; execution is single-threaded, so any
    positive cap is honored as-is."""
    raw = os.environ.get("ROBCERT_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"ROBCERT_THREADS must be a positive integer, "
                         f"got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"ROBCERT_THREADS must be a positive integer, "
                         f"got {raw!r}")
    return cap


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
