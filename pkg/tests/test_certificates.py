"""Certificate objects and the independent WAT verifier."""

import pytest

from robcert.avoidance import Path
from robcert.certificates import (NotRobinsonian, RobinsonOrdering,
                                  WeightedAsteroidalTriple, make_wat,
                                  verify_wat)
from robcert.matrix import Ordering
from util import claw


def test_make_wat_on_claw_leaves():
    A = claw()
    w = make_wat(A, 1, 2, 3)
    assert w is not None
    assert w.elements == frozenset({1, 2, 3})
    assert w.paths() == (Path((1, 0, 2), 3),
                         Path((1, 0, 3), 2),
                         Path((2, 0, 3), 1))
    assert verify_wat(A, w) is None


def test_make_wat_fails_without_paths():
    # center cannot be avoided: one pair lacks its path
    assert make_wat(claw(), 0, 1, 2) is None


def test_constructor_checks_path_roles():
    good = [Path((1, 0, 2), 3), Path((1, 0, 3), 2), Path((2, 0, 3), 1)]
    WeightedAsteroidalTriple(1, 2, 3, *good)
    with pytest.raises(ValueError):
        WeightedAsteroidalTriple(1, 2, 3, good[1], good[0], good[2])
    with pytest.raises(ValueError):
        WeightedAsteroidalTriple(1, 2, 2, *good)
    with pytest.raises(ValueError):
        # wrong avoided element on the first path
        WeightedAsteroidalTriple(
            1, 2, 3, Path((1, 0, 2), 0), good[1], good[2])


def test_verify_wat_reports_first_broken_edge():
    A = claw()
    # pretend the leaves connect directly: 2-3 is not an avoiding edge
    w = WeightedAsteroidalTriple(
        1, 2, 3, Path((1, 0, 2), 3), Path((1, 0, 3), 2), Path((2, 3), 1))
    bad = verify_wat(A, w)
    assert bad == ("yz", 2, 3)


def test_verify_wat_structural_errors():
    A = claw()
    w = WeightedAsteroidalTriple(
        1, 2, 9, Path((1, 0, 2), 9), Path((1, 0, 9), 2), Path((2, 0, 9), 1))
    with pytest.raises(ValueError):
        verify_wat(A, w)


def test_certificate_wrappers():
    o = RobinsonOrdering(Ordering([0, 1]))
    assert o.ordering == Ordering([0, 1])
    w = make_wat(claw(), 1, 2, 3)
    assert NotRobinsonian(w).wat is w
