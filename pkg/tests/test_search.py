"""Exhaustive existence oracle: verdicts, witnesses, pruning, budgets."""

import math

import pytest

from combiconfig import (
    SearchProblem,
    d2k,
    decide,
    minimal_element,
    tuple_of,
    verify,
)

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
              (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def test_fano_found_with_frozen_witness():
    verdict = decide(SearchProblem(7, 7, 3, 3))
    assert verdict.kind == "exists"
    assert verdict.nodes == 7
    assert verdict.witness.line_rows == tuple(FANO_LINES)
    assert verify(verdict.witness).ok


def test_counting_bounds_short_circuit():
    verdict = decide(SearchProblem(6, 6, 3, 3))
    assert verdict.kind == "not_exists"
    assert verdict.nodes == 0
    assert "below" in verdict.reason

    # v*r = b*k must hold before any search is worth running
    verdict = decide(SearchProblem(8, 7, 3, 3))
    assert verdict.kind == "not_exists"
    assert verdict.nodes == 0


def test_empty_problem_exists():
    verdict = decide(SearchProblem(0, 0, 3, 3))
    assert verdict.kind == "exists"
    assert verdict.witness.is_empty


def test_exists_beyond_the_first_instance(mk8):
    info = tuple_of(mk8)
    assert (info.v, info.b, info.d) == (8, 8, 8)
    assert verify(mk8).ok


def test_deterministic_across_runs_and_seeds():
    first = decide(SearchProblem(9, 9, 3, 3))
    second = decide(SearchProblem(9, 9, 3, 3, seed=99))
    assert first.kind == second.kind == "exists"
    assert first.nodes == second.nodes
    assert first.witness == second.witness


def test_symmetry_pinning_changes_nodes_not_verdicts():
    for v, b, r, k in ((7, 7, 3, 3), (8, 8, 3, 3), (9, 6, 2, 3),
                      (6, 4, 2, 3), (10, 5, 2, 4), (6, 6, 3, 3)):
        pinned = decide(SearchProblem(v, b, r, k))
        free = decide(SearchProblem(v, b, r, k, symmetry=False))
        assert pinned.kind == free.kind, (v, b, r, k)
        if pinned.kind == "exists":
            assert verify(free.witness).ok


def test_degree_two_verdicts_match_closed_form():
    # oracle agreement with the degree two membership rule, in each
    # orientation for every instance with at most 14 points
    for k in (3, 4, 5, 6):
        s = d2k(k)
        g = math.gcd(2, k)
        for d in range(0, 15):
            v = d * k // g
            b = d * 2 // g
            wanted = "exists" if s.contains(d) else "not_exists"
            if v <= 14:
                verdict = decide(SearchProblem(v, b, 2, k, node_budget=500_000))
                assert verdict.kind == wanted, (k, d, verdict.reason)
            # lines of size two backtrack hard, so keep that side smaller
            if b <= 10:
                flipped = decide(SearchProblem(b, v, k, 2, node_budget=500_000))
                assert flipped.kind == wanted, (k, d, "dual")


def test_budget_returns_unknown():
    verdict = decide(SearchProblem(40, 40, 3, 3, node_budget=5))
    assert verdict.kind == "unknown"
    assert verdict.nodes == 5
    assert "budget" in verdict.reason

    timed = decide(SearchProblem(26, 26, 3, 3, time_budget=0.0))
    assert timed.kind == "unknown"


def test_rejects_malformed_problems():
    with pytest.raises(ValueError):
        decide(SearchProblem(-1, 0, 3, 3))
    with pytest.raises(ValueError):
        decide(SearchProblem(4, 4, 0, 2))


def test_minimal_element_scan():
    scan = minimal_element(3, 3, 10)
    assert scan.found == 7
    assert scan.undecided == ()
    assert verify(scan.witness).ok
    assert tuple_of(scan.witness).d == 7

    scan = minimal_element(2, 3, 5)
    assert scan.found == 2

    empty_scan = minimal_element(3, 3, 5)
    assert empty_scan.found is None
    assert empty_scan.undecided == ()


def test_minimal_element_budget_leaves_undecided():
    scan = minimal_element(4, 4, 13, node_budget=10)
    assert scan.found is None
    assert 13 in scan.undecided
