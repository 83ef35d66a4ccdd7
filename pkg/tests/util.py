"""Shared builders for the test suite."""

from fractions import Fraction

from robcert.matrix import SymMatrix

# adjacency of K_{1,3} with the center first
CLAW_ROWS = [
    [0, 1, 1, 1],
    [1, 0, 0, 0],
    [1, 0, 0, 0],
    [1, 0, 0, 0],
]

# adjacency of the 4-cycle 0-1-2-3-0
C4_ROWS = [
    [0, 1, 0, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 0, 1, 0],
]


def intmat(rows, labels=None) -> SymMatrix:
    return SymMatrix.from_rows(
        [[Fraction(v) for v in row] for row in rows], labels)


def claw() -> SymMatrix:
    return intmat(CLAW_ROWS)


def c4() -> SymMatrix:
    return intmat(C4_ROWS)


def random_intmat(rng, n, lo=0, hi=3) -> SymMatrix:
    vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            vals[(i, j)] = Fraction(rng.randrange(lo, hi + 1))
    return SymMatrix.from_function(
        range(n), lambda u, v: vals[(min(u, v), max(u, v))])


def glue_instance(rng, n_inner, n_outer):
    """Robinson-ordered inner block sitting above a low-valued outside."""
    m = 3
    inner_pts = sorted(rng.randrange(0, 6) for _ in range(n_inner))
    outer_pts = sorted(rng.randrange(0, 8) for _ in range(n_outer + 1))
    inner = {}
    labels_in = [f"s{i}" for i in range(n_inner)]
    labels_out = [f"o{i}" for i in range(n_outer)]
    rep_pos = rng.randrange(n_outer + 1)

    def value(x, y):
        # inner pairs: in [m, m+k]; any pair touching outside: <= m
        def opos(lbl):
            i = int(lbl[1:])
            return i + 1 if i >= rep_pos else i
        if x[0] == "s" and y[0] == "s":
            d = abs(inner_pts[int(x[1:])] - inner_pts[int(y[1:])])
            return Fraction(m + max(0, 4 - d))
        px = rep_pos if x[0] == "s" else opos(x)
        py = rep_pos if y[0] == "s" else opos(y)
        d = abs(outer_pts[px] - outer_pts[py])
        return Fraction(max(0, m - d))

    A = SymMatrix.from_function(labels_in + labels_out, value)
    return A, labels_in
