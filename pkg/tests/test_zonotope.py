"""Tests for graphic zonotopes and their fixed polytopes."""

import math
from fractions import Fraction
from itertools import product

import networkx as nx
import pytest
from hypothesis import assume, given, settings, strategies as st
from sympy import Matrix

from equivariant_ehrhart.action import bind
from equivariant_ehrhart.arith import Polynomial, RationalFunction
from equivariant_ehrhart.errors import (
    Dependent,
    InvalidInput,
    NotAutomorphism,
    TooLarge,
    TooManyGenerators,
)
from equivariant_ehrhart.polytope.ehrhart import ehrhart_series
from equivariant_ehrhart.zonotope import (
    Graph,
    acyclic_orientations,
    automorphism_group,
    automorphisms,
    classify_polynomiality,
    connectivity_graph,
    fixed_zonotope_minkowski_contains,
    fixed_zonotope_quasipolynomial,
    fixed_zonotope_series,
    fixed_zonotope_vertices,
    graphic_zonotope,
    graphic_zonotope_contains,
    halfopen_parallelepiped_volume,
    indegree_vector,
    is_automorphism,
    is_compatible,
    path_graph_effectiveness,
    subforest_volume,
    subforests,
    two_valuation,
    zonotope_ehrhart,
)


def permutation_matrix(sigma):
    n = len(sigma)
    return [[1 if sigma[j] == i else 0 for j in range(n)] for i in range(n)]


def halfopen_count(vectors):
    """Integer points sum lambda_i v_i with 0 <= lambda_i < 1, by scanning the bounding box."""
    n = len(vectors[0])
    m = Matrix(vectors).T
    pseudo_inverse = (m.T * m).inv() * m.T
    rows = [
        [Fraction(int(pseudo_inverse[i, k].p), int(pseudo_inverse[i, k].q)) for k in range(n)]
        for i in range(len(vectors))
    ]
    ranges = [
        range(sum(min(0, v[k]) for v in vectors), sum(max(0, v[k]) for v in vectors) + 1)
        for k in range(n)
    ]
    count = 0
    for x in product(*ranges):
        lam = [sum(r[k] * x[k] for k in range(n)) for r in rows]
        if not all(0 <= c < 1 for c in lam):
            continue
        if all(sum(c * v[k] for c, v in zip(lam, vectors)) == x[k] for k in range(n)):
            count += 1
    return count


vector_sets = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-2, max_value=2), min_size=n, max_size=n),
        min_size=1,
        max_size=n,
    )
)


class TestGraph:
    """Tests for graph construction and validation."""

    def test_cycle(self):
        assert Graph.cycle(3).edges == ((0, 1), (0, 2), (1, 2))

    def test_from_edges_normalizes(self):
        assert Graph.from_edges(3, [(2, 1), (0, 1)]).edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)], [(0, 1, 2)]])
    def test_invalid_edges(self, edges):
        with pytest.raises(InvalidInput):
            Graph.from_edges(3, edges)

    def test_no_vertices(self):
        with pytest.raises(InvalidInput):
            Graph.from_edges(0, [])

    def test_incidence(self):
        assert Graph.path(4).incidence([1]) == 2
        assert Graph.path(4).incidence([0, 3]) == 2

    def test_to_dict(self):
        assert Graph.path(3).to_dict() == {"n": 3, "edges": [[0, 1], [1, 2]]}


class TestAutomorphisms:
    """Tests for automorphism enumeration."""

    def test_path(self):
        assert [list(p.array_form) for p in automorphisms(Graph.path(4))] == [
            [0, 1, 2, 3],
            [3, 2, 1, 0],
        ]

    def test_complete(self):
        assert len(automorphisms(Graph.complete(4))) == 24

    def test_cycle_group(self):
        group = automorphism_group(Graph.cycle(5))
        assert group.order == 10

    def test_is_automorphism(self):
        assert is_automorphism(Graph.path(4), [3, 2, 1, 0])
        assert not is_automorphism(Graph.path(4), [1, 0, 2, 3])


class TestZonotope:
    """Tests for the graphic zonotope."""

    def test_orientations(self):
        assert len(acyclic_orientations(Graph.complete(3))) == 6
        assert len(acyclic_orientations(Graph.path(4))) == 8

    def test_indegree_vector(self):
        assert indegree_vector(Graph.path(3), ((0, 1), (2, 1))) == (0, 2, 0)

    def test_k4_is_permutahedron(self):
        zonotope = graphic_zonotope(Graph.complete(4))
        assert len(zonotope.vertices) == 24
        assert zonotope.count_lattice_points() == 38

    def test_contains(self):
        path = Graph.path(3)
        assert graphic_zonotope_contains(path, (1, 1, 0))
        assert graphic_zonotope_contains(path, ("1/2", 1, "1/2"))
        assert not graphic_zonotope_contains(path, (2, 0, 0))
        assert not graphic_zonotope_contains(path, (1, 1, 1))

    def test_contains_wrong_dimension(self):
        with pytest.raises(InvalidInput):
            graphic_zonotope_contains(Graph.path(3), (1, 1))

    def test_contains_matches_hull(self):
        graph = Graph.cycle(4)
        zonotope = graphic_zonotope(graph)
        for point in product(range(3), repeat=4):
            assert graphic_zonotope_contains(graph, point) == zonotope.contains(point)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            graphic_zonotope(Graph.path(9))


class TestStanley:
    """Tests for Stanley's zonotope formula."""

    def test_k3(self):
        assert zonotope_ehrhart([(1, -1, 0), (1, 0, -1), (0, 1, -1)]) == Polynomial([1, 3, 3])

    def test_k4(self):
        generators = [(1 if k == u else -1 if k == v else 0 for k in range(4))
                      for u, v in Graph.complete(4).edges]
        assert zonotope_ehrhart([tuple(g) for g in generators]) == Polynomial([1, 6, 15, 16])

    def test_parallelepiped_volume(self):
        assert halfopen_parallelepiped_volume([(2, 0), (0, 3)]) == 6
        assert halfopen_parallelepiped_volume([(1, -1, 0), (0, 1, -1)]) == 1
        assert halfopen_parallelepiped_volume([]) == 1

    @settings(max_examples=30, deadline=None)
    @given(vector_sets)
    def test_volume_matches_halfopen_count(self, vectors):
        assume(Matrix(vectors).rank() == len(vectors))
        assert halfopen_parallelepiped_volume(vectors) == halfopen_count(vectors)

    def test_dependent(self):
        with pytest.raises(Dependent):
            halfopen_parallelepiped_volume([(1, 2), (2, 4)])

    def test_too_many_generators(self):
        with pytest.raises(TooManyGenerators):
            zonotope_ehrhart([(1,)] * 13)


class TestConnectivityGraph:
    """Tests for the connectivity graph of an automorphism."""

    def test_path_reversal(self):
        conn = connectivity_graph(Graph.path(4), [3, 2, 1, 0])
        assert conn.cycles == ((0, 3), (1, 2))
        assert conn.edges == ((0, 1),)
        assert conn.deg == ((0, 1), (1, 1))
        assert conn.edge_counts[0][1] == 2
        assert conn.generator((0, 1)) == (1, -1, -1, 1)
        assert conn.shift() == (0, Fraction(1, 2), Fraction(1, 2), 0)

    def test_triangle_transposition(self):
        conn = connectivity_graph(Graph.complete(3), [1, 0, 2])
        assert conn.deg[0][1] == 1
        assert conn.deg[1][0] == 2

    def test_not_automorphism(self):
        with pytest.raises(NotAutomorphism):
            connectivity_graph(Graph.path(4), [1, 0, 2, 3])

    def test_forest_count(self):
        conn = connectivity_graph(Graph.complete(4), [0, 1, 2, 3])
        forests = list(subforests(conn))
        assert len(forests) == 38
        assert forests[0].edges == ()
        assert all(subforest_volume(conn, f) == 1 for f in forests)
        assert all(is_compatible(conn, f) for f in forests)

    def test_incompatible_self_loop(self):
        conn = connectivity_graph(Graph.path(4), [3, 2, 1, 0])
        assert not any(is_compatible(conn, f) for f in subforests(conn))

    def test_two_valuation(self):
        assert two_valuation(0) == math.inf
        assert two_valuation(12) == 2
        assert two_valuation(-8) == 3
        assert two_valuation(7) == 0


class TestFixedZonotope:
    """Tests for the fixed polytope of an automorphism."""

    def test_vertices(self):
        assert fixed_zonotope_vertices(Graph.path(4), [3, 2, 1, 0]) == [
            (0, Fraction(3, 2), Fraction(3, 2), 0),
            (1, Fraction(1, 2), Fraction(1, 2), 1),
        ]

    def test_minkowski_membership(self):
        conn = connectivity_graph(Graph.path(4), [3, 2, 1, 0])
        half = Fraction(1, 2)
        assert fixed_zonotope_minkowski_contains(conn, (half, 1, 1, half))
        assert not fixed_zonotope_minkowski_contains(conn, (0, 0, 0, 0))

    def test_path_quasipolynomial(self):
        quasi = fixed_zonotope_quasipolynomial(Graph.path(4), [3, 2, 1, 0])
        assert quasi.constituents == (Polynomial([1, 1]), Polynomial())

    def test_path_series(self):
        series = fixed_zonotope_series(Graph.path(4), [3, 2, 1, 0])
        assert series.coefficients(6) == [1, 0, 3, 0, 5, 0]

    @pytest.mark.parametrize(
        "graph,sigma",
        [
            (Graph.path(4), [3, 2, 1, 0]),
            (Graph.complete(3), [1, 0, 2]),
            (Graph.cycle(4), [1, 2, 3, 0]),
            (Graph.complete(4), [1, 0, 3, 2]),
        ],
    )
    def test_series_matches_lattice_count(self, graph, sigma):
        action = bind(graphic_zonotope(graph), matrices=[permutation_matrix(sigma)])
        fixed = action.fixed_polytope(action.group.generators[0]).polytope
        quasi = fixed_zonotope_quasipolynomial(graph, sigma)
        series = fixed_zonotope_series(graph, sigma)
        counts = [fixed.count_lattice_points(t) for t in range(5)]
        assert [quasi.evaluate(t) for t in range(5)] == counts
        assert series.coefficients(5) == counts


class TestPolynomiality:
    """Tests for the polynomiality classification."""

    def test_identity(self):
        assert classify_polynomiality(Graph.complete(4), [0, 1, 2, 3]).case == "a"

    def test_even_self_degree(self):
        assert classify_polynomiality(Graph.cycle(4), [1, 2, 3, 0]).case == "b"

    def test_path_reversal(self):
        verdict = classify_polynomiality(Graph.path(4), [3, 2, 1, 0])
        assert verdict.case == "c"
        assert verdict.is_polynomial

    def test_transposition_of_k4(self):
        verdict = classify_polynomiality(Graph.complete(4), [1, 0, 2, 3])
        assert verdict.case == "non-polynomial"
        assert not verdict.is_polynomial
        assert verdict.max_incompatible_edges == 1
        assert verdict.witness.edges == ((1, 2),)


class TestPathEffectiveness:
    """Tests for the isotypic split of H* on odd paths."""

    def test_three(self):
        result = path_graph_effectiveness(3)
        assert result.identity == (1, 1)
        assert result.alternating == (0, 0)
        assert result.is_effective

    def test_five(self):
        result = path_graph_effectiveness(5)
        assert result.identity == (1, 11, 11, 1)
        assert result.reversal == (1, 3, 3, 1)
        assert result.trivial == (1, 7, 7, 1)
        assert result.alternating == (0, 4, 4, 0)

    @pytest.mark.parametrize("n", [1, 4])
    def test_invalid_length(self, n):
        with pytest.raises(InvalidInput):
            path_graph_effectiveness(n)


@pytest.mark.slow
class TestExhaustiveSweep:
    """Small graphs against lattice counts of their fixed polytopes."""

    def test_four_vertices(self):
        pairs = Graph.complete(4).edges
        for mask in range(1, 2 ** len(pairs)):
            graph = Graph.from_edges(4, [e for k, e in enumerate(pairs) if mask >> k & 1])
            zonotope = graphic_zonotope(graph)
            for sigma in automorphisms(graph):
                sigma = list(sigma.array_form)
                if sigma == sorted(sigma):
                    fixed = zonotope
                else:
                    action = bind(zonotope, matrices=[permutation_matrix(sigma)])
                    fixed = action.fixed_polytope(action.group.generators[0]).polytope
                quasi = fixed_zonotope_quasipolynomial(graph, sigma)
                counts = [fixed.count_lattice_points(t) for t in range(4)]
                assert [quasi.evaluate(t) for t in range(4)] == counts, (graph.edges, sigma)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_classification_matches_series(self, n):
        pairs = Graph.complete(n).edges
        for mask in range(1, 2 ** len(pairs)):
            graph = Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
            for sigma in automorphisms(graph):
                verdict = classify_polynomiality(graph, sigma)
                det = Polynomial.constant(1)
                for length in connectivity_graph(graph, sigma).lengths:
                    det = det * Polynomial.one_minus_z_power(length, 1)
                product = RationalFunction.from_series(fixed_zonotope_series(graph, sigma)) * det
                assert product.is_polynomial == verdict.is_polynomial, (graph.edges, sigma)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_classification_matches_pipeline(self, n):
        # one graph per isomorphism class, one automorphism per conjugacy class
        for atlas_graph in nx.graph_atlas_g():
            if atlas_graph.number_of_nodes() != n or atlas_graph.number_of_edges() == 0:
                continue
            graph = Graph.from_edges(n, list(atlas_graph.edges()))
            zonotope = graphic_zonotope(graph)
            for sigma in automorphism_group(graph).class_representatives[1:]:
                sigma = list(sigma.array_form)
                action = bind(zonotope, matrices=[permutation_matrix(sigma)])
                g = action.group.generators[0]
                fixed = action.fixed_polytope(g).polytope
                hstar_at_sigma = RationalFunction.from_series(ehrhart_series(fixed)) * action.det_factor(g)
                verdict = classify_polynomiality(graph, sigma)
                assert hstar_at_sigma.is_polynomial == verdict.is_polynomial, (graph.edges, sigma)
