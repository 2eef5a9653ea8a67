"""Finite groups acting on lattice polytopes by permuting vertices."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from sympy.combinatorics import Permutation

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.config import DEFAULT_ORDER_CAP
from equivariant_ehrhart.errors import Inconsistent, InvalidInput, NotASubgroup, NotInvariant
from equivariant_ehrhart.groups.characters import CharacterTable, character_table_symmetric
from equivariant_ehrhart.groups.group import (
    FiniteGroup,
    PermutationLike,
    as_permutation,
    close_group,
    cycle_type,
    images,
)
from equivariant_ehrhart.polytope.lattice import (
    det_one_minus_z,
    integer_kernel,
    inverse,
    matmul,
    matvec,
    rank,
)
from equivariant_ehrhart.polytope.polytope import LatticePolytope, Point

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FixedPolytope:
    """P^g, the convex hull of the barycenters of the <g>-orbits of vertices.

    Attributes:
        element: The group element g (a vertex permutation)
        polytope: The rational polytope P^g
    """
    element: Permutation
    polytope: LatticePolytope


def _homogenize(point: Sequence) -> list[Fraction]:
    return [Fraction(c) for c in point] + [Fraction(1)]


def _as_affine_matrix(matrix: Sequence[Sequence], n: int) -> list[list[Fraction]]:
    rows = [[Fraction(c) for c in row] for row in matrix]
    if len(rows) == n and all(len(r) == n for r in rows):
        return [r + [Fraction(0)] for r in rows] + [[Fraction(0)] * n + [Fraction(1)]]
    if len(rows) == n + 1 and all(len(r) == n + 1 for r in rows):
        if rows[n] != [Fraction(0)] * n + [Fraction(1)]:
            raise InvalidInput("affine matrix must have last row (0, ..., 0, 1)")
        return rows
    raise InvalidInput(f"matrix must be {n}x{n} or {n + 1}x{n + 1}")


class PolytopeAction:
    """A finite group acting on a polytope through vertex permutations.

    Group elements are permutations of vertex indices. Each element g also
    acts by an affine map [A b; 0 1] on R^n, and by an integral matrix on the
    lattice M' spanned by the homogenized polytope.

    Attributes:
        polytope: The polytope
        group: The acting group, on the ground set of vertex indices
    """

    def __init__(self, polytope: LatticePolytope, group: FiniteGroup) -> None:
        self.polytope = polytope
        self.group = group
        self._matrix_cache: dict[tuple[int, ...], Matrix] = {}
        self._rho_cache: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}

    @cached_property
    def _frame(self) -> tuple[list[int], list[list[int]], list[list[Fraction]]]:
        """Affinely independent vertices, a complement of their span and the inverse frame."""
        polytope = self.polytope
        n = polytope.ambient_dim
        chosen: list[int] = []
        for i, v in enumerate(polytope.vertices):
            rows = [_homogenize(polytope.vertices[j]) for j in chosen] + [_homogenize(v)]
            if rank(rows) > len(chosen):
                chosen.append(i)
            if len(chosen) == polytope.dim + 1:
                break
        k = polytope.denominator
        scaled = [[int(c * k) for c in _homogenize(polytope.vertices[i])] for i in chosen]
        complement = integer_kernel(scaled, n + 1)
        columns = [_homogenize(polytope.vertices[i]) for i in chosen] + [
            [Fraction(c) for c in vec] for vec in complement
        ]
        frame = [list(row) for row in zip(*columns)]
        return chosen, complement, inverse(frame)

    def matrix(self, g: PermutationLike) -> Matrix:
        """Affine matrix [A b; 0 1] realizing the vertex permutation g.

        Raises:
            Inconsistent: If no affine map sends every vertex v_i to v_g(i)
        """
        perm = as_permutation(g, self.group.degree)
        key = images(perm)
        if key not in self._matrix_cache:
            self._matrix_cache[key] = _solve_affine_matrix(self.polytope, perm, self._frame)
        return self._matrix_cache[key]

    def rho_restricted(self, g: PermutationLike) -> tuple[tuple[int, ...], ...]:
        """Matrix of g on the lattice M' in the basis ``polytope.affine_lattice_basis``.

        Raises:
            Inconsistent: If the matrix is not integral (g does not preserve M')
        """
        perm = as_permutation(g, self.group.degree)
        key = images(perm)
        if key not in self._rho_cache:
            a = self.matrix(perm)
            basis = self.polytope.affine_lattice_basis
            columns = [self.polytope.lattice_coordinates(matvec(a, b)) for b in basis]
            if any(c.denominator != 1 for col in columns for c in col):
                raise Inconsistent(
                    "the action does not preserve the affine lattice of the polytope",
                    {"element": list(key)},
                )
            self._rho_cache[key] = tuple(
                tuple(int(col[i]) for col in columns) for i in range(len(basis))
            )
        return self._rho_cache[key]

    @property
    def matrices(self) -> list[Matrix]:
        """Affine matrices of the class representatives."""
        return [self.matrix(g) for g in self.group.class_representatives]

    @property
    def rho(self) -> list[tuple[tuple[int, ...], ...]]:
        """Restricted lattice matrices of the class representatives."""
        return [self.rho_restricted(g) for g in self.group.class_representatives]

    def apply(self, g: PermutationLike, point: Sequence, height: int = 1) -> Point:
        """Image of a point of the height-t slice of the cone over P."""
        a = self.matrix(g)
        image = matvec(a, [Fraction(c) for c in point] + [Fraction(height)])
        return tuple(image[:-1])

    def coordinate_permutation(self, g: PermutationLike) -> Permutation | None:
        """Permutation of coordinates induced by g, if its linear part is a permutation matrix."""
        a = self.matrix(g)
        n = self.polytope.ambient_dim
        images_of = []
        for j in range(n):
            column = [a[i][j] for i in range(n)]
            ones = [i for i, c in enumerate(column) if c == 1]
            if len(ones) != 1 or any(c not in (0, 1) for c in column):
                return None
            images_of.append(ones[0])
        if sorted(images_of) != list(range(n)):
            return None
        return Permutation(images_of)

    def fixed_polytope(self, g: PermutationLike) -> FixedPolytope:
        perm = as_permutation(g, self.group.degree)
        vertices = self.polytope.vertices
        barycenters = []
        for cycle in perm.full_cyclic_form:
            size = len(cycle)
            barycenters.append(
                tuple(sum((vertices[i][c] for i in cycle), Fraction(0)) / size
                      for c in range(self.polytope.ambient_dim))
            )
        fixed = LatticePolytope(barycenters, face_dim_limit=self.polytope.face_dim_limit)
        return FixedPolytope(perm, fixed)

    def det_factor(self, g: PermutationLike) -> Polynomial[int]:
        """det(I - z * rho(g)) on M'."""
        return det_one_minus_z(self.rho_restricted(g))

    def restrict(self, subgroup: FiniteGroup) -> PolytopeAction:
        """The same action, restricted to a subgroup."""
        if not subgroup.is_subgroup_of(self.group):
            raise NotASubgroup("restriction target is not a subgroup of the acting group")
        restricted = PolytopeAction(self.polytope, subgroup)
        restricted._matrix_cache = self._matrix_cache
        restricted._rho_cache = self._rho_cache
        return restricted

    def __repr__(self) -> str:
        return f"PolytopeAction({self.polytope!r}, {self.group!r})"


def _solve_affine_matrix(
    polytope: LatticePolytope,
    perm: Permutation,
    frame: tuple[list[int], list[list[int]], list[list[Fraction]]],
) -> Matrix:
    chosen, complement, frame_inverse = frame
    vertices = polytope.vertices
    targets = [_homogenize(vertices[perm(i)]) for i in chosen] + [
        [Fraction(c) for c in vec] for vec in complement
    ]
    target_frame = [list(row) for row in zip(*targets)]
    a = matmul(target_frame, frame_inverse)
    for i, v in enumerate(vertices):
        if matvec(a, _homogenize(v)) != _homogenize(vertices[perm(i)]):
            raise Inconsistent(
                f"no affine map realizes the vertex permutation {perm.array_form}",
                {"permutation": list(perm.array_form), "vertex": i},
            )
    return tuple(tuple(row) for row in a)


def matrix_to_vertex_permutation(polytope: LatticePolytope, matrix: Sequence[Sequence]) -> list[int]:
    """Vertex permutation induced by an n x n linear or (n+1) x (n+1) affine matrix.

    Raises:
        NotInvariant: If some vertex is mapped outside the vertex set
    """
    n = polytope.ambient_dim
    a = _as_affine_matrix(matrix, n)
    index = {v: i for i, v in enumerate(polytope.vertices)}
    result = []
    for i, v in enumerate(polytope.vertices):
        image = tuple(matvec(a, _homogenize(v))[:-1])
        if image not in index:
            raise NotInvariant(
                f"vertex {i} is mapped to {[str(c) for c in image]}, which is not a vertex",
                {"vertex": i, "image": [str(c) for c in image]},
            )
        result.append(index[image])
    if sorted(result) != list(range(len(result))):
        raise NotInvariant("matrix does not permute the vertices")
    return result


def bind(
    polytope: LatticePolytope,
    vertex_perms: Sequence[Sequence[int]] = (),
    matrices: Sequence[Sequence[Sequence]] = (),
    order_cap: int = DEFAULT_ORDER_CAP,
) -> PolytopeAction:
    """Bind the group generated by vertex permutations and matrices to a polytope.

    Matrix generators are converted to vertex permutations first, so the
    group is always closed on vertex indices. Every generator is checked to
    be realized by an affine map preserving the affine lattice.

    Args:
        polytope: The polytope
        vertex_perms: Generators as permutations of vertex indices (0-based)
        matrices: Generators as linear (n x n) or affine ((n+1) x (n+1)) matrices
        order_cap: Largest accepted group order

    Raises:
        NotInvariant: If a matrix maps a vertex outside the vertex set
        Inconsistent: If a vertex permutation is not affine or breaks the lattice
        OrderCapExceeded: If the generated group is too large
    """
    count = len(polytope.vertices)
    generators = [as_permutation(p, count) for p in vertex_perms]
    generators += [as_permutation(matrix_to_vertex_permutation(polytope, m), count) for m in matrices]
    group = close_group(generators, degree=count, order_cap=order_cap)
    action = PolytopeAction(polytope, group)
    for g in generators:
        action.rho_restricted(g)
    logger.debug("Bound group of order %d to %r", group.order, polytope)
    return action


def fixed_polytope(action: PolytopeAction, g: PermutationLike) -> FixedPolytope:
    return action.fixed_polytope(g)


def det_factor(action: PolytopeAction, g: PermutationLike) -> Polynomial[int]:
    return action.det_factor(g)


def symmetric_table_for_action(action: PolytopeAction, n: int) -> CharacterTable:
    """S_n table matched to classes by the cycle type of the induced coordinate permutation.

    Raises:
        InvalidInput: If some class does not act by a permutation of coordinates
        OutOfRange: If n is outside the supported range
    """
    def coordinate_cycle_type(rep):
        perm = action.coordinate_permutation(rep)
        if perm is None:
            raise InvalidInput(
                "class representative does not permute coordinates",
                {"representative": list(rep.array_form)},
            )
        return cycle_type(perm)

    return character_table_symmetric(n, action.group, coordinate_cycle_type)


__all__ = [
    "PolytopeAction",
    "FixedPolytope",
    "bind",
    "fixed_polytope",
    "det_factor",
    "matrix_to_vertex_permutation",
    "symmetric_table_for_action",
]
