"""Tests for half-open decompositions and box-point characters."""

import pytest

from equivariant_ehrhart.arith import Polynomial, RationalSeries
from equivariant_ehrhart.errors import HypothesisViolated, InvalidInput, NotInCone
from equivariant_ehrhart.groups import ClassFunction
from equivariant_ehrhart.halfopen import (
    Interval,
    IntervalPartition,
    Triangulation,
    box_points,
    decompose_cone_point,
    ee_via_orbits,
    hstar_via_permrep,
    interval_orbits,
    validate_decomposition,
)
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.selftest import (
    PI3_PERMREP_INTERVALS,
    PI3_PERMREP_SIMPLICES,
    pi3_barycentric_decomposition,
    pi3_permrep_decomposition,
)
from equivariant_ehrhart.special import permutahedron

A, B, C = (1, 2, 3), (2, 1, 3), (1, 3, 2)
D, E, F = (2, 3, 1), (3, 1, 2), (3, 2, 1)


def class_rows(group, rows):
    return Polynomial(ClassFunction(group, row) for row in rows)


def square_decomposition():
    """The unit square cut along its swap-invariant diagonal."""
    square = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    below, above = [(0, 0), (1, 0), (1, 1)], [(0, 0), (0, 1), (1, 1)]
    return (
        Triangulation.of(square, [below, above]),
        IntervalPartition.of([((), below), ([(0, 1)], above)]),
    )


DECOMPOSITIONS = {
    "pi3-permrep": pi3_permrep_decomposition,
    "pi3-barycentric": pi3_barycentric_decomposition,
    "square": square_decomposition,
}


class TestTriangulation:
    """Tests for triangulation input checks."""

    def test_face_poset(self):
        triangulation, _parts = pi3_permrep_decomposition()
        # 4 triangles, 9 edges, 6 vertices and the empty face
        assert len(triangulation.face_poset) == 20

    def test_collinear_simplex(self):
        with pytest.raises(InvalidInput):
            Triangulation.of(permutahedron(3), [[A, (2, 2, 2), F]])

    def test_point_outside(self):
        with pytest.raises(InvalidInput):
            Triangulation.of(permutahedron(3), [[A, B, (0, 0, 0)]])

    def test_interval_membership(self):
        interval = Interval.of([A], [A, B, C])
        assert frozenset([A, B]) in interval
        assert frozenset([B, C]) not in interval
        assert interval.dim == 2
        assert interval.order[0] == A


class TestValidation:
    """Tests for half-open decomposition validation."""

    def test_permrep_decomposition(self):
        triangulation, parts = pi3_permrep_decomposition()
        assert validate_decomposition(triangulation, parts).ok

    def test_barycentric_decomposition(self):
        triangulation, parts = pi3_barycentric_decomposition()
        assert validate_decomposition(triangulation, parts).ok

    def test_missing_interval(self):
        triangulation, _parts = pi3_permrep_decomposition()
        parts = IntervalPartition.of(PI3_PERMREP_INTERVALS[:3])
        report = validate_decomposition(triangulation, parts)
        assert not report.ok
        assert "uncovered-face" in {v.kind for v in report.violations}

    def test_double_cover(self):
        triangulation, _parts = pi3_permrep_decomposition()
        parts = IntervalPartition.of(PI3_PERMREP_INTERVALS + (((), PI3_PERMREP_SIMPLICES[1]),))
        report = validate_decomposition(triangulation, parts)
        assert "double-covered-face" in {v.kind for v in report.violations}


class TestBoxPoints:
    """Tests for box point enumeration and cone decomposition."""

    def test_odd_triangle(self):
        box = box_points(Interval.of((), PI3_PERMREP_SIMPLICES[0]))
        assert box.points_by_height == {
            0: ((0, 0, 0, 0),),
            1: ((2, 2, 2, 1),),
            2: ((4, 4, 4, 2),),
        }

    def test_unimodular_ear(self):
        box = box_points(Interval.of([A], PI3_PERMREP_SIMPLICES[1]))
        assert box.all_points() == [(1, 2, 3, 1)]

    def test_empty_upper(self):
        with pytest.raises(InvalidInput):
            box_points(Interval.of((), ()))

    def test_decompose_center(self):
        triangulation, parts = pi3_permrep_decomposition()
        result = decompose_cone_point(triangulation, parts, (2, 2, 2, 1))
        assert result.interval_index == 0
        assert result.y == (2, 2, 2, 1)
        assert result.coefficients == (0, 0, 0)

    def test_decompose_dilated_vertex(self):
        triangulation, parts = pi3_permrep_decomposition()
        result = decompose_cone_point(triangulation, parts, (3, 6, 9, 3))
        assert result.interval_index == 1
        assert result.y == (1, 2, 3, 1)
        assert tuple(a + b for a, b in zip(result.w, result.y)) == (3, 6, 9, 3)

    def test_not_in_cone(self):
        triangulation, parts = pi3_permrep_decomposition()
        with pytest.raises(NotInCone):
            decompose_cone_point(triangulation, parts, (2, 2, 2, -1))
        with pytest.raises(NotInCone):
            decompose_cone_point(triangulation, parts, (0, 0, 0, 1))


class TestPermrep:
    """Tests for H* as a permutation character on box points."""

    def test_pi3(self, pi3_action):
        triangulation, parts = pi3_permrep_decomposition()
        result = hstar_via_permrep(triangulation, parts, pi3_action)
        assert result.hstar == class_rows(pi3_action.group, [[1, 1, 1], [4, 1, 1], [1, 1, 1]])
        assert result.invariant_interval == 0
        assert result.notes == ()

    def test_orbits(self, pi3_action):
        _triangulation, parts = pi3_permrep_decomposition()
        assert interval_orbits(pi3_action, parts) == [[0], [1, 2, 3]]

    def test_lower_dimensional_upper(self, pi3_action):
        triangulation, parts = pi3_barycentric_decomposition()
        with pytest.raises(HypothesisViolated) as exc_info:
            hstar_via_permrep(triangulation, parts, pi3_action)
        assert exc_info.value.details["clause"] == "full-dimensional-upper"

    def test_non_invariant_triangulation(self, pi3_action):
        fan = [[A, B, E], [A, E, F], [A, F, D], [A, D, C]]
        triangulation = Triangulation.of(permutahedron(3), fan)
        parts = IntervalPartition.of([((), fan[0]), ([F], fan[1]), ([D], fan[2]), ([C], fan[3])])
        with pytest.raises(HypothesisViolated) as exc_info:
            hstar_via_permrep(triangulation, parts, pi3_action)
        assert exc_info.value.details["clause"] == "simplices-to-simplices"


class TestOrbitSeries:
    """Tests for EE(P; z) from interval orbits."""

    def test_pi3(self, pi3_action):
        triangulation, parts = pi3_barycentric_decomposition()
        result = ee_via_orbits(triangulation, parts, pi3_action)
        group = pi3_action.group
        assert result.numerator == class_rows(group, [[1, 1, 1], [4, -2, -2], [1, 1, 1]])
        assert result.chi_tP == class_rows(group, [[1, 1, 1], [3, 0, 0], [3, 0, 0]])
        assert result.at_class(0) == RationalSeries.over([1, 4, 1], 1, 3)

    def test_fixed_box_point_moving_face(self, pi3_action):
        triangulation, parts = pi3_permrep_decomposition()
        with pytest.raises(HypothesisViolated) as exc_info:
            ee_via_orbits(triangulation, parts, pi3_action)
        assert exc_info.value.details["clause"] == "fixed-box-point"


class TestDisjointUnion:
    """Cone(P) as the disjoint union of the half-open interval cones."""

    @pytest.mark.parametrize("name", sorted(DECOMPOSITIONS))
    def test_every_cone_point_splits(self, name):
        triangulation, parts = DECOMPOSITIONS[name]()
        assert validate_decomposition(triangulation, parts).ok
        boxes = [box_points(interval) for interval in parts.intervals]
        for t in (1, 2, 3):
            for point in triangulation.polytope.lattice_points(t):
                x = tuple(point) + (t,)
                split = decompose_cone_point(triangulation, parts, x)
                assert all(c >= 0 for c in split.coefficients)
                assert split.y in boxes[split.interval_index].points_by_height.get(split.y[-1], ())
                assert tuple(a + b for a, b in zip(split.w, split.y)) == x

    @pytest.mark.parametrize("name", sorted(DECOMPOSITIONS))
    def test_box_series_counts_lattice_points(self, name):
        triangulation, parts = DECOMPOSITIONS[name]()
        totals = [0] * 4
        for interval in parts.intervals:
            by_height = box_points(interval).points_by_height
            numerator = Polynomial(len(by_height.get(h, ())) for h in range(max(by_height) + 1))
            series = RationalSeries.over(numerator, 1, len(interval.upper))
            totals = [a + b for a, b in zip(totals, series.coefficients(4))]
        polytope = triangulation.polytope
        assert totals == [1] + [polytope.count_lattice_points(t) for t in (1, 2, 3)]

    def test_square_box_points(self):
        _triangulation, parts = square_decomposition()
        heights = [sorted(box_points(i).points_by_height) for i in parts.intervals]
        assert heights == [[0], [1]]
