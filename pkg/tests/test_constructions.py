"""Subdivision pipeline, composition surgery and scale factor assembly."""

import random

import pytest

from combiconfig import (
    Configuration,
    InfeasibleParameters,
    NotConnected,
    NotExpressible,
    NumericalSemigroup,
    ParameterMismatch,
    RegularGraph,
    SearchProblem,
    amalgamate,
    construct_for_d,
    decide,
    degree_two_configuration,
    dual,
    find_anchors,
    minimal_nontrivial,
    sm_plus_one,
    subdivision_configuration,
    tuple_of,
    verify,
)


def check(config):
    report = verify(config)
    assert report.ok, str(report)
    return tuple_of(config)


def test_subdivision_of_k4():
    k4 = RegularGraph(4, 3, frozenset({(0, 1), (0, 2), (0, 3),
                                       (1, 2), (1, 3), (2, 3)}))
    config = subdivision_configuration(k4)
    info = check(config)
    assert (info.v, info.b, info.r, info.k) == (6, 4, 2, 3)


def test_subdivision_rejects_disconnected():
    two_triangles = RegularGraph(6, 2, frozenset({(0, 1), (1, 2), (0, 2),
                                                  (3, 4), (4, 5), (3, 5)}))
    with pytest.raises(NotConnected):
        subdivision_configuration(two_triangles)


def test_degree_two_pipeline():
    info = check(degree_two_configuration(4, 10))
    assert (info.v, info.b, info.r, info.k, info.d) == (20, 10, 2, 4, 10)

    info = check(degree_two_configuration(3, 2))
    assert (info.v, info.b, info.r, info.k, info.d) == (6, 4, 2, 3, 2)

    assert degree_two_configuration(5, 0).is_empty
    with pytest.raises(InfeasibleParameters):
        degree_two_configuration(3, 1)
    with pytest.raises(InfeasibleParameters):
        degree_two_configuration(4, 3)


def test_dual_swaps_sides():
    config = degree_two_configuration(4, 10)
    flipped = dual(config)
    info = check(flipped)
    assert (info.v, info.b, info.r, info.k) == (10, 20, 4, 2)
    assert dual(flipped) == config


def test_minimal_nontrivial_small_pairs():
    expected = {(3, 3): (102, 102, 102), (3, 4): (344, 258, 86),
                (4, 3): (258, 344, 86)}
    for (r, k), (v, b, d) in expected.items():
        config = minimal_nontrivial(r, k)
        info = check(config)
        assert (info.v, info.b, info.d) == (v, b, d)
        assert len(config.incidences) == v * r


def test_minimal_nontrivial_needs_degree_three():
    with pytest.raises(InfeasibleParameters):
        minimal_nontrivial(2, 3)
    with pytest.raises(InfeasibleParameters):
        minimal_nontrivial(3, 2)


def test_amalgamate_adds_scale_factors(fano, mk8):
    info = check(amalgamate(fano, fano))
    assert (info.v, info.b, info.d) == (14, 14, 14)

    info = check(amalgamate(fano, mk8))
    assert (info.v, info.b, info.d) == (15, 15, 15)


def test_amalgamate_accepts_anchored_input(fano):
    plain = amalgamate(fano, fano)
    pre_anchored = amalgamate(find_anchors(fano), find_anchors(fano))
    assert tuple_of(plain).d == tuple_of(pre_anchored).d == 14
    assert verify(pre_anchored).ok


def test_amalgamate_empty_is_identity(fano):
    empty = Configuration.empty(3, 3)
    assert amalgamate(fano, empty) == fano
    assert amalgamate(empty, fano) == fano
    assert amalgamate(empty, empty).is_empty


def test_amalgamate_rejects_degree_mismatch(fano):
    with pytest.raises(ParameterMismatch):
        amalgamate(fano, degree_two_configuration(4, 5))


def test_sm_plus_one_from_fano(fano):
    config = sm_plus_one(fano)
    info = check(config)
    assert (info.v, info.b, info.r, info.k, info.d) == (22, 22, 3, 3, 22)


def test_sm_plus_one_cross_degrees():
    # base with r != k: twelve copies plus one fan vertex per side group
    verdict = decide(SearchProblem(12, 9, 3, 4))
    assert verdict.kind == "exists"
    config = sm_plus_one(verdict.witness)
    info = check(config)
    assert (info.v, info.b, info.r, info.k, info.d) == (148, 111, 3, 4, 37)


def test_sm_plus_one_needs_degree_three():
    with pytest.raises(InfeasibleParameters):
        sm_plus_one(degree_two_configuration(4, 5))


def test_construct_for_d(fano):
    pieces = [(7, fano), (22, sm_plus_one(fano))]

    info = check(construct_for_d(29, 3, 3, pieces))
    assert info.d == 29
    info = check(construct_for_d(21, 3, 3, pieces))
    assert info.d == 21
    assert construct_for_d(0, 3, 3, pieces).is_empty

    with pytest.raises(NotExpressible):
        construct_for_d(20, 3, 3, pieces)
    with pytest.raises(ParameterMismatch):
        construct_for_d(14, 3, 3, [(8, fano)])


def test_construct_for_d_matches_membership(fano):
    # every semigroup element must assemble and verify, every gap must
    # be refused
    pieces = [(7, fano), (22, sm_plus_one(fano))]
    generated = NumericalSemigroup.from_generators((7, 22))
    rng = random.Random(11)
    for _ in range(12):
        d = rng.randrange(0, 60)
        if generated.contains(d):
            assert check(construct_for_d(d, 3, 3, pieces)).d == d
        else:
            with pytest.raises(NotExpressible):
                construct_for_d(d, 3, 3, pieces)
