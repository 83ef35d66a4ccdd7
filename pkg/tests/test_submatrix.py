"""Maximal Robinsonian subsets and the deletion/cycle dual families."""

import itertools
import random

import pytest

from robcert.certificates import RobinsonOrdering
from robcert.certify import certify
from robcert.matrix import restrict
from robcert.submatrix import (enumerate_families, greedy_robinsonian_core,
                               is_maximal_robinsonian, is_minimal_wa_cycle)
from util import c4, claw, intmat, random_intmat


def test_claw_families():
    fam = enumerate_families(claw())
    threes = {frozenset(s) for s in itertools.combinations(range(4), 3)}
    assert fam.maximal_robinsonian == frozenset(threes)
    assert fam.minimal_deletions == frozenset(
        frozenset([i]) for i in range(4))
    assert fam.minimal_cycles == frozenset([frozenset(range(4))])


def test_c4_families():
    fam = enumerate_families(c4())
    assert fam.minimal_cycles == frozenset([frozenset(range(4))])
    assert frozenset([0]) in fam.minimal_deletions


def test_robinson_matrix_families_are_trivial():
    A = intmat([[0, 3, 1], [3, 0, 2], [1, 2, 0]])
    fam = enumerate_families(A)
    assert fam.maximal_robinsonian == frozenset([frozenset(A.labels)])
    assert fam.minimal_deletions == frozenset([frozenset()])
    assert fam.minimal_cycles == frozenset()


def test_membership_oracles_on_the_claw():
    A = claw()
    assert is_maximal_robinsonian(A, {0, 1, 2})
    assert not is_maximal_robinsonian(A, {1, 2})
    assert not is_maximal_robinsonian(A, {0, 1, 2, 3})
    assert is_minimal_wa_cycle(A, {0, 1, 2, 3})
    with pytest.raises(ValueError):
        is_minimal_wa_cycle(A, {0, 1})
    with pytest.raises(ValueError):
        is_maximal_robinsonian(A, {0, 9})


def test_minimal_cycles_need_at_least_four_elements():
    for seed in range(12):
        rng = random.Random(seed)
        A = random_intmat(rng, rng.randrange(4, 7))
        fam = enumerate_families(A)
        assert all(len(C) >= 4 for C in fam.minimal_cycles)


def test_enumeration_matches_membership_scan():
    for seed in range(10):
        rng = random.Random(100 + seed)
        A = random_intmat(rng, 5)
        fam = enumerate_families(A)
        labels = A.labels
        maximal = set()
        cycles = set()
        for r in range(len(labels) + 1):
            for sub in itertools.combinations(labels, r):
                if is_maximal_robinsonian(A, sub):
                    maximal.add(frozenset(sub))
                if len(sub) >= 3 and is_minimal_wa_cycle(A, sub):
                    cycles.add(frozenset(sub))
        assert fam.maximal_robinsonian == maximal
        assert fam.minimal_cycles == cycles
        assert fam.minimal_deletions == frozenset(
            frozenset(labels) - M for M in maximal)


def test_transversal_duality_holds():
    # every minimal cycle meets every minimal deletion set, and
    # dropping any element of a cycle misses some deletion set
    for seed in range(8):
        rng = random.Random(seed)
        A = random_intmat(rng, 6)
        fam = enumerate_families(A)
        for C in fam.minimal_cycles:
            assert all(C & F for F in fam.minimal_deletions)
            for x in C:
                assert any(not ((C - {x}) & F)
                           for F in fam.minimal_deletions)


def test_size_bound_is_enforced():
    rng = random.Random(0)
    A = random_intmat(rng, 6)
    with pytest.raises(ValueError):
        enumerate_families(A, bound=5)
    enumerate_families(A, bound=6)


def test_greedy_core_is_robinsonian():
    for seed in range(25):
        rng = random.Random(seed)
        A = random_intmat(rng, rng.randrange(4, 9))
        core = greedy_robinsonian_core(A)
        assert set(core) <= set(A.labels)
        assert list(core) == [x for x in A.labels if x in set(core)]
        if len(core) > 2:
            assert isinstance(certify(restrict(A, core)), RobinsonOrdering)


def test_greedy_core_of_a_robinson_matrix_is_everything():
    A = intmat([[0, 3, 1], [3, 0, 2], [1, 2, 0]])
    assert greedy_robinsonian_core(A) == A.labels
