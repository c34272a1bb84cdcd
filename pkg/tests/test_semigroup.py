"""Numerical semigroup arithmetic and the configurable scale factor sets."""

import math
import random

import pytest

from combiconfig import (
    DescribeEffort,
    InfeasibleParameters,
    NotMember,
    NotNumerical,
    NumericalSemigroup,
    d2k,
    drk_describe,
    tuple_of,
    verify,
)


def naive_members(generators, bound):
    """Reachable sums up to bound, by plain dynamic programming."""
    table = [False] * (bound + 1)
    table[0] = True
    for value in range(1, bound + 1):
        table[value] = any(value >= g and table[value - g]
                           for g in generators)
    return table


def test_frobenius_and_gaps_frozen_values():
    assert NumericalSemigroup.from_generators((2, 3)).frobenius() == 1
    assert NumericalSemigroup.from_generators(range(5, 10)).frobenius() == 4
    assert NumericalSemigroup.from_generators((3, 4, 5)).gaps() == [1, 2]
    assert NumericalSemigroup.from_generators((7, 22)).frobenius() == 125
    assert NumericalSemigroup.from_generators((1,)).frobenius() == -1


def test_contains_matches_naive_dp():
    rng = random.Random(3)
    for _ in range(20):
        size = rng.randrange(1, 4)
        gens = sorted(rng.sample(range(2, 40), size))
        if math.gcd(*gens, 0) != 1:
            gens.append(gens[-1] + 1)
        s = NumericalSemigroup.from_generators(gens)
        bound = 5 * max(0, s.frobenius()) + 5
        table = naive_members(gens, bound)
        for value in range(bound + 1):
            assert s.contains(value) == table[value], (gens, value)


def test_closed_under_addition():
    s = NumericalSemigroup.from_generators((7, 22))
    members = [d for d in range(200) if s.contains(d)]
    rng = random.Random(5)
    for _ in range(200):
        a, c = rng.choice(members), rng.choice(members)
        assert s.contains(a + c)


def test_certificate_recomposes():
    s = NumericalSemigroup.from_generators((7, 22))
    assert s.certificate(29) == {7: 1, 22: 1}
    assert s.certificate(20) is None
    for value in (0, 7, 44, 125 + 1, 300):
        cert = s.certificate(value)
        assert cert is not None
        assert sum(g * c for g, c in cert.items()) == value


def test_two_generator_closed_form():
    # frobenius of <a, b> is ab - a - b when gcd(a, b) = 1
    rng = random.Random(7)
    for _ in range(20):
        a = rng.randrange(2, 30)
        b = rng.randrange(2, 30)
        if math.gcd(a, b) != 1 or a == b:
            continue
        s = NumericalSemigroup.from_generators((min(a, b), max(a, b)))
        assert s.frobenius() == a * b - a - b


def test_gcd_above_one_rejected_unless_monoid():
    with pytest.raises(NotNumerical):
        NumericalSemigroup.from_generators((4, 6))
    m = NumericalSemigroup.monoid((4, 6))
    assert m.contains(10)
    assert not m.contains(7)
    assert not m.is_numerical


def test_generator_shape_rejected():
    with pytest.raises(NotNumerical):
        NumericalSemigroup.from_generators(())
    with pytest.raises(NotNumerical):
        NumericalSemigroup.from_generators((0, 3))
    with pytest.raises(NotNumerical):
        NumericalSemigroup((3, 2))


def test_apery_set():
    s = NumericalSemigroup.from_generators(range(5, 10))
    assert s.apery_set(5) == [0, 6, 7, 8, 9]
    # each entry is the least member in its residue class
    for m, entry in enumerate(s.apery_set(6)):
        assert entry % 6 == m
        assert s.contains(entry)
        assert entry < 6 or not s.contains(entry - 6)
    with pytest.raises(NotMember):
        s.apery_set(4)


def test_d2k_closed_forms():
    assert d2k(3).generators == (2, 3)
    assert d2k(4).generators == (5, 6, 7, 8, 9)
    assert d2k(5).generators == (3, 4, 5)
    assert d2k(6).generators == (7, 8, 9, 10, 11, 12, 13)
    with pytest.raises(InfeasibleParameters):
        d2k(1)


def test_describe_degree_one_is_finite():
    description = drk_describe(1, 5)
    assert description.kind == "exact_finite_base"
    assert description.finite_elements == (0, 5)
    assert description.inner is None
    assert description.notes


def test_describe_degree_two_closed_form():
    description = drk_describe(2, 5)
    assert description.kind == "exact_closed_form"
    assert description.inner.generators == (3, 4, 5)
    assert sorted(description.witnesses) == [3, 4, 5]
    for d, config in description.witnesses.items():
        info = tuple_of(config)
        assert verify(config).ok
        assert (info.r, info.k, info.d) == (2, 5, d)

    flipped = drk_describe(5, 2)
    assert flipped.inner.generators == (3, 4, 5)
    for config in flipped.witnesses.values():
        assert (config.r, config.k) == (5, 2)


def test_describe_degree_three_closing_formula():
    description = drk_describe(3, 3)
    assert description.kind == "exact_closed_form"
    assert description.inner.generators == tuple(range(7, 14))
    assert description.outer_lower_bound == 7
    witness = description.witnesses[7]
    assert verify(witness).ok
    assert tuple_of(witness).d == 7

    wide = drk_describe(3, 5)
    assert wide.inner.generators == (4, 5, 6, 7)
    assert tuple_of(wide.witnesses[4]).d == 4


def test_describe_bounds_branch():
    description = drk_describe(4, 4)
    assert description.kind == "bounds"
    assert description.inner.generators == (13, 53)
    assert description.outer_lower_bound == 13
    for d, config in description.witnesses.items():
        assert verify(config).ok
        assert tuple_of(config).d == d
    assert math.gcd(13, 53) == 1


def test_describe_inner_respects_outer_bound():
    # no positive element of a reported inner bound may undercut the
    # counting bound
    for r, k in ((2, 4), (2, 7), (3, 3), (3, 4), (4, 4)):
        description = drk_describe(r, k)
        bound = description.outer_lower_bound
        gens = description.inner.generators
        assert all(g >= bound for g in gens), (r, k)


def test_describe_effort_is_tunable():
    fast = DescribeEffort(scan_span=1, node_budget=10_000, time_budget=5.0)
    description = drk_describe(3, 3, fast)
    assert description.inner.generators[0] == 7
