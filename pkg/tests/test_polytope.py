"""Tests for rational polytopes, exact LP and Ehrhart counting."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from equivariant_ehrhart.arith import Polynomial
from equivariant_ehrhart.errors import DegreeExceedsDimension, DimensionTooLarge, InvalidInput
from equivariant_ehrhart.polytope import (
    LatticePolytope,
    convex_combination,
    det_one_minus_z,
    ehrhart_polynomial,
    ehrhart_quasipolynomial,
    ehrhart_series,
    find_feasible_point,
    hstar_to_ehrhart_polynomial,
    in_convex_hull,
    integer_kernel,
    saturation,
)
from equivariant_ehrhart.polytope.lattice import primitive, rank, smith_invariants
from equivariant_ehrhart.special import permutahedron

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
TRIANGLE = [(0, 0), (1, 0), (0, 1)]


class TestLinearAlgebra:
    """Tests for the exact integer and rational helpers."""

    def test_integer_kernel(self):
        kernel = integer_kernel([[1, 1]])
        assert len(kernel) == 1
        a, b = kernel[0]
        assert a + b == 0 and abs(a) == 1

    def test_kernel_of_empty_system(self):
        assert integer_kernel([], 2) == [[1, 0], [0, 1]]

    def test_saturation(self):
        basis = saturation([[2, 4]], 2)
        assert len(basis) == 1
        assert gcd(*basis[0]) == 1
        assert basis[0][1] == 2 * basis[0][0]

    def test_smith_invariants(self):
        assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]

    def test_det_one_minus_z(self):
        assert det_one_minus_z([[0, 1], [1, 0]]) == Polynomial([1, 0, -1])
        assert det_one_minus_z([]) == Polynomial([1])

    def test_primitive(self):
        assert primitive([Fraction(1, 2), 1]) == [1, 2]
        assert primitive([0, 0]) == [0, 0]

    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1


class TestLinearProgramming:
    """Tests for Phase-I feasibility."""

    def test_interior_point(self):
        assert in_convex_hull(TRIANGLE, (Fraction(1, 3), Fraction(1, 3)))

    def test_exterior_point(self):
        assert not in_convex_hull(TRIANGLE, (1, 1))

    def test_weights_reproduce_target(self):
        target = (Fraction(1, 2), Fraction(1, 4))
        weights = convex_combination(SQUARE, target)
        assert sum(weights) == 1
        assert all(w >= 0 for w in weights)
        for k in range(2):
            assert sum(w * p[k] for w, p in zip(weights, SQUARE)) == target[k]

    def test_infeasible(self):
        assert find_feasible_point([[1, 1]], [-1]) is None

    def test_empty_points(self):
        assert convex_combination([], (0,)) is None

    @settings(max_examples=50, deadline=None)
    @given(
        st.fractions(min_value=-1, max_value=2, max_denominator=6),
        st.fractions(min_value=-1, max_value=2, max_denominator=6),
    )
    def test_square_membership(self, x, y):
        expected = 0 <= x <= 1 and 0 <= y <= 1
        assert in_convex_hull(SQUARE, (x, y)) == expected


class TestLatticePolytope:
    """Tests for construction, membership and faces."""

    def test_redundant_points_dropped(self):
        polytope = LatticePolytope([(0, 0), (2, 0), (1, 0)])
        assert polytope.vertices == ((0, 0), (2, 0))
        assert polytope.dim == 1

    def test_no_vertices(self):
        with pytest.raises(InvalidInput):
            LatticePolytope([])

    def test_mixed_dimensions(self):
        with pytest.raises(InvalidInput):
            LatticePolytope([(0, 0), (1, 0, 0)])

    def test_denominator(self):
        polytope = LatticePolytope([(0,), (Fraction(1, 2),)])
        assert polytope.denominator == 2
        assert not polytope.is_lattice

    def test_contains(self):
        square = LatticePolytope(SQUARE)
        assert square.contains((1, 1))
        assert square.contains(("1/2", "1/3"))
        assert not square.contains((2, 0))

    def test_contains_wrong_dimension(self):
        with pytest.raises(InvalidInput):
            LatticePolytope(SQUARE).contains((0, 0, 0))

    def test_square_faces(self):
        faces = LatticePolytope(SQUARE).faces()
        assert [f.dim for f in faces].count(0) == 4
        assert [f.dim for f in faces].count(1) == 4
        assert faces[-1].dim == 2

    def test_hexagon_faces(self):
        faces = permutahedron(3).faces()
        assert len(faces) == 13

    def test_face_limit(self):
        simplex = LatticePolytope(
            [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], face_dim_limit=2
        )
        with pytest.raises(DimensionTooLarge):
            simplex.faces()

    def test_face_polytope(self):
        square = LatticePolytope(SQUARE)
        edge = next(f for f in square.faces() if f.dim == 1)
        assert square.face_polytope(edge).count_lattice_points() == 2

    def test_canonical_key_ignores_order(self):
        assert LatticePolytope(SQUARE).canonical_key() == LatticePolytope(SQUARE[::-1]).canonical_key()
        assert LatticePolytope(SQUARE).canonical_key() != LatticePolytope(TRIANGLE).canonical_key()

    def test_equality(self):
        assert LatticePolytope(SQUARE) == LatticePolytope(SQUARE[::-1])

    def test_barycenter(self):
        assert LatticePolytope(SQUARE).barycenter == (Fraction(1, 2), Fraction(1, 2))


class TestLatticePoints:
    """Tests for lattice point enumeration."""

    def test_square_points(self):
        square = LatticePolytope(SQUARE)
        assert square.lattice_points() == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert square.count_lattice_points(2) == 9

    def test_zero_dilate(self):
        assert LatticePolytope(SQUARE).count_lattice_points(0) == 1

    def test_negative_dilate(self):
        with pytest.raises(ValueError):
            LatticePolytope(SQUARE).lattice_points(-1)

    def test_hexagon_points(self):
        hexagon = permutahedron(3)
        assert (2, 2, 2) in hexagon.lattice_points()
        assert hexagon.count_lattice_points() == 7
        assert hexagon.count_lattice_points(2) == 19

    def test_rational_point(self):
        point = LatticePolytope([(Fraction(1, 2), 0)])
        assert point.count_lattice_points(1) == 0
        assert point.count_lattice_points(2) == 1

    def test_dilate(self):
        assert LatticePolytope(TRIANGLE).dilate(3).count_lattice_points() == 10

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
    def test_rectangle_count(self, a, b):
        rectangle = LatticePolytope([(0, 0), (a, 0), (0, b), (a, b)])
        assert rectangle.count_lattice_points() == (a + 1) * (b + 1)


class TestEhrhart:
    """Tests for Ehrhart series and polynomials."""

    def test_square_series(self):
        assert ehrhart_series(LatticePolytope(SQUARE)).numerator == Polynomial([1, 1])

    def test_triangle_series(self):
        series = ehrhart_series(LatticePolytope(TRIANGLE))
        assert series.numerator == Polynomial([1])
        assert series.denominator_factors == ((1, 3),)

    def test_hexagon_series(self):
        assert ehrhart_series(permutahedron(3)).numerator == Polynomial([1, 4, 1])

    def test_square_polynomial(self):
        assert ehrhart_polynomial(LatticePolytope(SQUARE)) == Polynomial([1, 2, 1])

    def test_hstar_to_polynomial(self):
        assert hstar_to_ehrhart_polynomial(Polynomial([1, 4, 1]), 2) == Polynomial([1, 3, 3])

    def test_hstar_degree_too_large(self):
        with pytest.raises(DegreeExceedsDimension):
            hstar_to_ehrhart_polynomial(Polynomial([1, 1, 1]), 1)

    def test_polynomial_needs_lattice_polytope(self):
        with pytest.raises(InvalidInput):
            ehrhart_polynomial(LatticePolytope([(0,), (Fraction(1, 2),)]))

    def test_half_segment_quasipolynomial(self):
        quasi = ehrhart_quasipolynomial(LatticePolytope([(0,), (Fraction(1, 2),)]))
        assert quasi.period == 2
        assert [quasi.evaluate(t) for t in range(6)] == [1, 1, 2, 2, 3, 3]
