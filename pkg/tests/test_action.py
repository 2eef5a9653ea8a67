"""Tests for group actions on polytopes."""

from fractions import Fraction

import pytest

from equivariant_ehrhart.action import (
    bind,
    det_factor,
    fixed_polytope,
    matrix_to_vertex_permutation,
    symmetric_table_for_action,
)
from equivariant_ehrhart.arith import Polynomial
from equivariant_ehrhart.errors import (
    Inconsistent,
    InvalidInput,
    NotASubgroup,
    NotInvariant,
    OrderCapExceeded,
)
from equivariant_ehrhart.groups import cyclic_group
from equivariant_ehrhart.polytope import LatticePolytope

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


class TestBind:
    """Tests for binding generators to a polytope."""

    def test_matrix_generator(self, square_action):
        assert square_action.group.order == 2
        assert list(square_action.group.generators[0].array_form) == [0, 2, 1, 3]

    def test_vertex_permutation_generator(self):
        action = bind(LatticePolytope(SQUARE), vertex_perms=[[0, 2, 1, 3]])
        assert action.group.order == 2

    def test_affine_matrix(self, cube_action):
        assert cube_action.group.order == 4
        assert cube_action.group.is_abelian()

    def test_matrix_not_preserving_vertices(self):
        with pytest.raises(NotInvariant):
            bind(LatticePolytope(SQUARE), matrices=[[[2, 0], [0, 1]]])

    def test_matrix_wrong_shape(self):
        with pytest.raises(InvalidInput):
            bind(LatticePolytope(SQUARE), matrices=[[[1, 0, 0]]])

    def test_affine_matrix_bad_last_row(self):
        with pytest.raises(InvalidInput):
            matrix_to_vertex_permutation(
                LatticePolytope(SQUARE), [[1, 0, 0], [0, 1, 0], [1, 0, 1]]
            )

    def test_non_affine_permutation(self):
        with pytest.raises(Inconsistent):
            bind(LatticePolytope(SQUARE), vertex_perms=[[1, 0, 2, 3]])

    def test_permutation_breaking_lattice(self):
        triangle = LatticePolytope([(0, 0), (2, 0), (0, 1)])
        with pytest.raises(Inconsistent):
            bind(triangle, vertex_perms=[[0, 2, 1]])

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded):
            bind(LatticePolytope(SQUARE), vertex_perms=[[0, 2, 1, 3]], order_cap=1)


class TestPolytopeAction:
    """Tests for per-element data of an action."""

    def test_apply(self, square_action):
        swap = square_action.group.class_representatives[1]
        assert square_action.apply(swap, (1, 0)) == (0, 1)
        assert square_action.apply(swap, (2, 0), height=2) == (0, 2)

    def test_coordinate_permutation(self, square_action, cube_action):
        swap = square_action.group.class_representatives[1]
        assert list(square_action.coordinate_permutation(swap).array_form) == [1, 0]
        half_turn = cube_action.group.class_representatives[1]
        assert cube_action.coordinate_permutation(half_turn) is None

    def test_fixed_polytope(self, square_action):
        swap = square_action.group.class_representatives[1]
        fixed = fixed_polytope(square_action, swap).polytope
        assert fixed.dim == 1
        assert set(fixed.vertices) == {(0, 0), (1, 1)}

    def test_fixed_polytope_rational(self):
        segment = LatticePolytope([(0,), (1,)])
        action = bind(segment, vertex_perms=[[1, 0]])
        fixed = action.fixed_polytope(action.group.class_representatives[1]).polytope
        assert fixed.vertices == ((Fraction(1, 2),),)
        assert fixed.denominator == 2

    def test_det_factor(self, square_action):
        identity, swap = square_action.group.class_representatives
        assert det_factor(square_action, identity) == Polynomial([1, -3, 3, -1])
        assert det_factor(square_action, swap) == Polynomial([1, -1, -1, 1])

    def test_rho_is_integral(self, pi3_action):
        for matrix in pi3_action.rho:
            assert all(isinstance(c, int) for row in matrix for c in row)

    def test_restrict(self, square_action):
        trivial = square_action.group.subgroup([])
        restricted = square_action.restrict(trivial)
        assert restricted.group.order == 1
        assert restricted.polytope is square_action.polytope

    def test_restrict_to_non_subgroup(self, square_action):
        with pytest.raises(NotASubgroup):
            square_action.restrict(cyclic_group(4))


class TestSymmetricTable:
    """Tests for matching S_n tables to coordinate permutations."""

    def test_pi4(self, pi4_symmetric_action):
        table = symmetric_table_for_action(pi4_symmetric_action, 4)
        table.validate()
        assert table.labels[0] == "[4]"

    def test_non_coordinate_action(self, cube_action):
        with pytest.raises(InvalidInput):
            symmetric_table_for_action(cube_action, 3)
