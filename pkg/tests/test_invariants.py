"""Graph invariants: independence, fractional packing, theta, edge covers."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ks18 import (
    ExclusivityGraph,
    clique_edge_cover_complement,
    fractional_packing,
    independence_number,
    lovasz_theta,
    maximal_cliques,
    validate_clique_cover,
)


def cycle(n: int) -> ExclusivityGraph:
    return ExclusivityGraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def petersen() -> ExclusivityGraph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return ExclusivityGraph(10, outer + spokes + inner)


def complete(n: int) -> ExclusivityGraph:
    return ExclusivityGraph(n, list(combinations(range(1, n + 1), 2)))


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=9))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return ExclusivityGraph(n, edges)


class TestMaximalCliques:
    def test_triangle_plus_pendant(self):
        g = ExclusivityGraph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
        assert maximal_cliques(g) == [(3, 4), (1, 2, 3)]

    def test_edgeless_graph_gives_singletons(self):
        g = ExclusivityGraph(3, [])
        assert maximal_cliques(g) == [(1,), (2,), (3,)]


class TestIndependenceNumber:
    def test_ks18(self, graph):
        result = independence_number(graph)
        assert result.alpha == 4
        assert result.witness == (1, 5, 8, 11)
        assert graph.is_independent(result.witness)

    def test_small_oracles(self):
        assert independence_number(cycle(5)).alpha == 2
        assert independence_number(petersen()).alpha == 4
        assert independence_number(complete(6)).alpha == 1
        assert independence_number(ExclusivityGraph(5, [])).alpha == 5

    def test_witness_is_lexicographically_smallest(self):
        result = independence_number(cycle(5))
        assert result.witness == (1, 3)

    def test_size_limit(self):
        big = ExclusivityGraph(41, [(i, i + 1) for i in range(1, 41)])
        with pytest.raises(ValueError, match="instance too large for exact mode"):
            independence_number(big)


class TestFractionalPacking:
    def test_ks18_exact(self, graph):
        result = fractional_packing(graph)
        assert result.mode == "exact-rational"
        assert result.value == Fraction(9, 2)
        cliques = maximal_cliques(graph)
        for c in cliques:
            assert sum(result.weights[v - 1] for v in c) <= 1

    def test_c5_exact(self):
        result = fractional_packing(cycle(5))
        assert result.value == Fraction(5, 2)

    def test_triangle_free_graph_is_half_integral(self):
        result = fractional_packing(petersen())
        assert result.value == Fraction(5)

    def test_complete_graph(self):
        assert fractional_packing(complete(5)).value == Fraction(1)

    def test_float_mode_above_limit(self):
        ring = ExclusivityGraph(30, [(i, i % 30 + 1) for i in range(1, 31)])
        result = fractional_packing(ring)
        assert result.mode == "float"
        assert result.value_float == pytest.approx(15.0, abs=1e-6)


class TestLovaszTheta:
    def test_ks18_certificate(self, graph, vectors):
        result = lovasz_theta(graph, vectors=vectors, method="certificate")
        assert result.method == "certificate"
        assert result.value == pytest.approx(4.5, abs=1e-6)

    def test_ks18_sdp(self, graph):
        result = lovasz_theta(graph, method="sdp")
        assert result.method == "sdp"
        assert result.value == pytest.approx(4.5, abs=1e-6)

    def test_c5_is_sqrt5(self):
        result = lovasz_theta(cycle(5))
        assert result.value == pytest.approx(5 ** 0.5, abs=1e-6)

    def test_petersen_is_4(self):
        result = lovasz_theta(petersen())
        assert result.value == pytest.approx(4.0, abs=1e-5)

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError, match="unknown method"):
            lovasz_theta(cycle(5), method="magic")

    def test_size_limit(self):
        big = ExclusivityGraph(33, [(i, i + 1) for i in range(1, 33)])
        with pytest.raises(ValueError, match="instance too large for sdp mode"):
            lovasz_theta(big)


class TestCliqueEdgeCover:
    def test_ks18_cover_of_complement(self, graph):
        result = clique_edge_cover_complement(graph, budget_s=30.0)
        assert result.size == 18
        assert result.minimal == "proven"
        assert validate_clique_cover(graph, result.cliques) == []

    def test_budget_zero_downgrades_claim(self, graph):
        result = clique_edge_cover_complement(graph, budget_s=0.0)
        assert result.minimal == "upper-bound-only"
        assert validate_clique_cover(graph, result.cliques) == []
        assert result.size >= 18

    def test_c5(self):
        result = clique_edge_cover_complement(cycle(5))
        assert result.size == 5
        assert result.minimal == "proven"

    def test_complete_graph_needs_nothing(self):
        result = clique_edge_cover_complement(complete(4))
        assert result.size == 0

    def test_edgeless_graph_needs_one_clique(self):
        result = clique_edge_cover_complement(ExclusivityGraph(5, []))
        assert result.size == 1
        assert result.cliques == ((1, 2, 3, 4, 5),)

    def test_validate_rejects_non_clique(self, graph):
        failures = validate_clique_cover(graph, [(1, 2)])
        assert failures
        assert any("not a clique of the complement" in f for f in failures)

    def test_validate_rejects_incomplete_cover(self, graph):
        comp = graph.complement()
        one = maximal_cliques(comp)[-1]
        failures = validate_clique_cover(graph, [one])
        assert any("uncovered" in f for f in failures)


class TestOrderingProperties:
    @settings(max_examples=30, deadline=None)
    @given(small_graphs())
    def test_sandwich_alpha_le_alpha_star(self, g):
        alpha = independence_number(g).alpha
        alpha_star = fractional_packing(g)
        assert Fraction(alpha) <= alpha_star.value
        assert alpha_star.value <= Fraction(g.n)

    @settings(max_examples=8, deadline=None)
    @given(small_graphs())
    def test_theta_between_alpha_and_alpha_star(self, g):
        alpha = independence_number(g).alpha
        alpha_star = fractional_packing(g)
        theta = lovasz_theta(g).value
        assert theta >= alpha - 1e-5
        assert theta <= float(alpha_star.value) + 1e-5

    @settings(max_examples=20, deadline=None)
    @given(small_graphs())
    def test_cover_always_validates(self, g):
        result = clique_edge_cover_complement(g, budget_s=5.0)
        assert validate_clique_cover(g, result.cliques) == []
