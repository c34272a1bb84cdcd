"""Circulant supplier and the certified girth scaffold generator."""

import pytest

from combiconfig import (
    BudgetExhausted,
    InfeasibleParameters,
    NotRegular,
    RegularGraph,
    ScaffoldOptions,
    circulant_regular,
    girth,
    regular_graph_with_girth,
)


def test_regular_graph_validates_degrees():
    with pytest.raises(NotRegular):
        RegularGraph(3, 2, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(NotRegular):
        RegularGraph(3, 2, frozenset({(1, 0), (1, 2), (0, 2)}))


def test_circulant_examples():
    triangle = circulant_regular(2, 3)
    assert len(triangle.edges) == 3
    assert triangle.is_connected()

    graph = circulant_regular(4, 10)
    assert len(graph.edges) == 20
    assert graph.is_connected()
    assert all(len(row) == 4 for row in graph.adjacency())

    cube_like = circulant_regular(3, 8)
    assert len(cube_like.edges) == 12
    assert cube_like.is_connected()


def test_circulant_infeasible_demands():
    with pytest.raises(InfeasibleParameters):
        circulant_regular(3, 5)  # odd degree on an odd vertex count
    with pytest.raises(InfeasibleParameters):
        circulant_regular(4, 4)  # degree above what 4 vertices admit
    with pytest.raises(InfeasibleParameters):
        circulant_regular(1, 10)


def test_scaffold_default_girth_small_degrees():
    for n in range(3, 8):
        graph = regular_graph_with_girth(n)
        assert graph.degree == n
        assert graph.is_connected()
        assert girth(graph) >= 5


def test_scaffold_certified_through_degree_sixteen():
    # the composition surgery consumes these; (r-1)(k-1) reaches 16 at
    # degrees (5, 5)
    for n in (9, 12, 16):
        graph = regular_graph_with_girth(n)
        assert graph.degree == n
        assert girth(graph) >= 5


def test_scaffold_rejects_degenerate_requests():
    with pytest.raises(InfeasibleParameters):
        regular_graph_with_girth(2)
    with pytest.raises(InfeasibleParameters):
        regular_graph_with_girth(4, ScaffoldOptions(girth=2))


def test_scaffold_is_deterministic():
    first = regular_graph_with_girth(5)
    second = regular_graph_with_girth(5)
    assert first.edges == second.edges


def test_scaffold_multiplier_scales():
    small = regular_graph_with_girth(3)
    large = regular_graph_with_girth(3, ScaffoldOptions(multiplier=3))
    assert large.n == 3 * small.n
    assert girth(large) >= 5


def test_scaffold_higher_girth():
    for n, wanted in ((3, 7), (3, 8), (4, 7)):
        graph = regular_graph_with_girth(n, ScaffoldOptions(girth=wanted))
        assert graph.degree == n
        assert graph.is_connected()
        assert girth(graph) >= wanted


def test_scaffold_absurd_girth_exhausts_budget():
    with pytest.raises(BudgetExhausted):
        regular_graph_with_girth(10, ScaffoldOptions(girth=12))
