"""Rational polytopes given by their vertices."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, lcm
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull

from equivariant_ehrhart.errors import DimensionTooLarge, InvalidInput, VerificationFailed
from equivariant_ehrhart.polytope.lattice import (
    integer_kernel,
    inverse,
    primitive,
    rank,
    rref,
    saturation,
    solve_rational,
)
from equivariant_ehrhart.polytope.lp import in_convex_hull

logger = logging.getLogger(__name__)

Point = tuple[Fraction, ...]
IntPoint = tuple[int, ...]

DEFAULT_FACE_DIM_LIMIT = 6
# candidate chart points materialised per slice of the bounding box
_SLICE_LIMIT = 1 << 20


def as_point(values: Iterable) -> Point:
    """Convert ints, Fractions and "p/q" strings to a tuple of Fractions."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Facet:
    """Facet inequality normal . y <= offset * t of the chart projection of tP.

    Attributes:
        normal: Primitive integer outer normal in chart coordinates
        offset: Right-hand side for t = 1
        vertices: Indices of the polytope vertices on the facet
    """
    normal: tuple[int, ...]
    offset: Fraction
    vertices: frozenset[int]


@dataclass(frozen=True)
class Face:
    """A nonempty face, given by the polytope vertices it contains.

    Attributes:
        vertex_subset: Sorted indices into the parent's vertices
        dim: Affine dimension of the face
    """
    vertex_subset: tuple[int, ...]
    dim: int


def _affine_rank(points: Sequence[Point]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


class LatticePolytope:
    """Convex hull of finitely many rational points.

    Redundant input points are discarded at construction, so ``vertices``
    holds exactly the extreme points (in input order). Lattice-point work
    happens in a chart: the coordinates ``chart`` determine every point of
    the affine hull, the remaining coordinates are affine functions of them.

    Attributes:
        vertices: Extreme points as tuples of Fractions
        ambient_dim: n
        dim: Affine dimension d
        denominator: Smallest k > 0 with kP a lattice polytope
    """

    def __init__(self, vertices: Iterable[Iterable], *, face_dim_limit: int = DEFAULT_FACE_DIM_LIMIT) -> None:
        points: list[Point] = []
        seen: set[Point] = set()
        for v in vertices:
            p = as_point(v)
            if p not in seen:
                seen.add(p)
                points.append(p)
        if not points:
            raise InvalidInput("a polytope needs at least one vertex")
        n = len(points[0])
        if any(len(p) != n for p in points):
            raise InvalidInput("vertices have different dimensions")

        self.ambient_dim = n
        self.face_dim_limit = face_dim_limit
        self.dim = _affine_rank(points)
        if len(points) > self.dim + 1:
            points = [
                p for i, p in enumerate(points)
                if not in_convex_hull(points[:i] + points[i + 1:], p)
            ]
        self.vertices: tuple[Point, ...] = tuple(points)
        self.denominator = lcm(1, *(c.denominator for p in points for c in p))
        self._build_chart()
        logger.debug(
            "Polytope with %d vertices, dim %d in R^%d, denominator %d",
            len(self.vertices), self.dim, n, self.denominator,
        )

    # Chart of the affine hull

    def _build_chart(self) -> None:
        n = self.ambient_dim
        homogeneous = [list(p) + [Fraction(1)] for p in self.vertices]
        # equations (a, a0) with a.v + a0 = 0 on every vertex
        k = self.denominator
        scaled = [[int(c * k) for c in row] for row in homogeneous]
        equations = integer_kernel(scaled, n + 1)
        reduced, pivots = rref(equations) if equations else ([], ())
        self.dependent: tuple[int, ...] = pivots
        self.chart: tuple[int, ...] = tuple(j for j in range(n) if j not in pivots)
        # x_D[i] = (Q[i] . x_J + q[i] * t) / den[i]
        self._chart_rows = []
        for row in reduced:
            den = lcm(1, *(c.denominator for c in row))
            q_row = tuple(int(-row[j] * den) for j in self.chart)
            self._chart_rows.append((q_row, int(-row[n] * den), den))

    def to_chart(self, point: Sequence) -> tuple:
        return tuple(point[j] for j in self.chart)

    def from_chart(self, y: Sequence, t=1) -> Point:
        """Lift chart coordinates of a point of tP's affine hull."""
        x: list = [None] * self.ambient_dim
        for j, value in zip(self.chart, y):
            x[j] = Fraction(value)
        for i, (q_row, q0, den) in zip(self.dependent, self._chart_rows):
            x[i] = Fraction(sum(a * Fraction(v) for a, v in zip(q_row, y)) + q0 * t, den)
        return tuple(x)

    # Derived data

    @property
    def is_lattice(self) -> bool:
        return self.denominator == 1

    @property
    def barycenter(self) -> Point:
        m = len(self.vertices)
        return tuple(sum(col, Fraction(0)) / m for col in zip(*self.vertices))

    @cached_property
    def affine_lattice_basis(self) -> tuple[tuple[int, ...], ...]:
        """Basis of the saturated lattice span{(v, 1)} intersected with Z^(n+1)."""
        k = self.denominator
        scaled = [[int(c * k) for c in p] + [k] for p in self.vertices]
        independent = []
        for row in scaled:
            if rank(independent + [row]) > len(independent):
                independent.append(row)
        return tuple(tuple(v) for v in saturation(independent, self.ambient_dim + 1))

    @cached_property
    def _basis_solver(self) -> tuple[tuple[int, ...], list[list[Fraction]]]:
        basis = self.affine_lattice_basis
        columns = [list(col) for col in zip(*basis)]  # (n+1) x (d+1)
        _reduced, rows = rref([list(b) for b in basis])
        square = [columns[r] for r in rows]
        return tuple(rows), inverse(square)

    def lattice_coordinates(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Coordinates of a vector of span{(v, 1)} in ``affine_lattice_basis``."""
        rows, inv = self._basis_solver
        picked = [Fraction(vector[r]) for r in rows]
        coords = tuple(sum((a * b for a, b in zip(row, picked)), Fraction(0)) for row in inv)
        check = [sum((c * b[i] for c, b in zip(coords, self.affine_lattice_basis)), Fraction(0))
                 for i in range(self.ambient_dim + 1)]
        if check != [Fraction(v) for v in vector]:
            raise InvalidInput("vector does not lie in the linear span of the homogenized polytope")
        return coords

    def canonical_key(self) -> str:
        """SHA-256 of the sorted vertex list, used as a cache key."""
        text = ";".join(",".join(str(c) for c in v) for v in sorted(self.vertices))
        return hashlib.sha256(text.encode()).hexdigest()

    def dilate(self, t: int) -> LatticePolytope:
        return LatticePolytope([[c * t for c in v] for v in self.vertices], face_dim_limit=self.face_dim_limit)

    # Facets

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        """Exact facets of the chart projection.

        For d >= 2 Qhull proposes hyperplanes through d chart vertices; each
        one is recomputed in rational arithmetic, oriented, checked against
        every vertex and made primitive.
        """
        d = self.dim
        ys = [self.to_chart(v) for v in self.vertices]
        if d == 0:
            return ()
        if d == 1:
            lo = min(range(len(ys)), key=lambda i: ys[i][0])
            hi = max(range(len(ys)), key=lambda i: ys[i][0])
            return (
                Facet((-1,), -ys[lo][0], frozenset({lo})),
                Facet((1,), ys[hi][0], frozenset({hi})),
            )

        hull = ConvexHull(np.array([[float(c) for c in y] for y in ys]))
        found: dict[tuple, Facet] = {}
        for simplex in hull.simplices:
            facet = self._exact_facet(ys, [int(i) for i in simplex])
            if facet is not None:
                found.setdefault((facet.normal, facet.offset), facet)
        facets = tuple(sorted(found.values(), key=lambda f: (f.normal, f.offset)))
        for i in range(len(ys)):
            if sum(1 for f in facets if i in f.vertices) < d:
                raise VerificationFailed(
                    f"vertex {i} lies on fewer than {d} facets",
                    {"vertex": i, "facets": len(facets)},
                )
        logger.debug("Found %d facets from %d Qhull simplices", len(facets), len(hull.simplices))
        return facets

    def _exact_facet(self, ys: list[tuple], simplex: list[int]) -> Facet | None:
        base = ys[simplex[0]]
        diffs = [[a - b for a, b in zip(ys[i], base)] for i in simplex[1:]]
        den = lcm(1, *(c.denominator for row in diffs for c in row))
        normals = integer_kernel([[int(c * den) for c in row] for row in diffs], self.dim)
        if len(normals) != 1:
            logger.warning("Rejected degenerate Qhull facet through vertices %s", simplex)
            return None
        normal = primitive(normals[0])
        values = [sum((a * c for a, c in zip(normal, y)), Fraction(0)) for y in ys]
        offset = values[simplex[0]]
        above = any(v > offset for v in values)
        below = any(v < offset for v in values)
        if above and below:
            logger.warning("Rejected Qhull facet through vertices %s: not supporting", simplex)
            return None
        if above:
            normal = [-a for a in normal]
            values = [-v for v in values]
            offset = -offset
        on = frozenset(i for i, v in enumerate(values) if v == offset)
        if _affine_rank([ys[i] for i in sorted(on)]) != self.dim - 1:
            logger.warning("Rejected Qhull facet through vertices %s: wrong dimension", simplex)
            return None
        return Facet(tuple(normal), offset, on)

    # Membership and lattice points

    def contains(self, point: Sequence) -> bool:
        """Exact membership by Phase-I LP feasibility.

        Raises:
            InvalidInput: If the point has the wrong dimension
        """
        if len(point) != self.ambient_dim:
            raise InvalidInput(
                f"point has dimension {len(point)}, polytope lives in R^{self.ambient_dim}"
            )
        return in_convex_hull(self.vertices, as_point(point))

    def _chart_box(self, t: int) -> list[tuple[int, int]]:
        box = []
        for axis in range(len(self.chart)):
            values = [v[self.chart[axis]] * t for v in self.vertices]
            box.append((ceil(min(values)), floor(max(values))))
        return box

    def _scan(self, t: int) -> Iterable[np.ndarray]:
        """Yield arrays of lattice points of tP, slice by slice."""
        n = self.ambient_dim
        if t == 0:
            yield np.zeros((1, n), dtype=np.int64)
            return
        if self.dim == 0:
            x = [c * t for c in self.vertices[0]]
            if all(c.denominator == 1 for c in x):
                yield np.array([[int(c) for c in x]], dtype=np.int64)
            return

        box = self._chart_box(t)
        if any(lo > hi for lo, hi in box):
            return
        bounds = [(np.array(f.normal, dtype=np.int64), floor(f.offset * t)) for f in self.facets]
        first_lo, first_hi = box[0]
        rest = box[1:]
        rest_size = 1
        for lo, hi in rest:
            rest_size *= hi - lo + 1
        step = max(1, _SLICE_LIMIT // max(rest_size, 1))
        ranges = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in rest]

        for start in range(first_lo, first_hi + 1, step):
            head = np.arange(start, min(start + step, first_hi + 1), dtype=np.int64)
            grids = np.meshgrid(head, *ranges, indexing="ij")
            ys = np.stack([g.ravel() for g in grids], axis=1)
            mask = np.ones(len(ys), dtype=bool)
            for normal, rhs in bounds:
                mask &= ys @ normal <= rhs
            ys = ys[mask]
            if not len(ys):
                continue
            points = np.zeros((len(ys), n), dtype=np.int64)
            points[:, list(self.chart)] = ys
            keep = np.ones(len(ys), dtype=bool)
            for i, (q_row, q0, den) in zip(self.dependent, self._chart_rows):
                numer = ys @ np.array(q_row, dtype=np.int64) + q0 * t
                keep &= numer % den == 0
                points[:, i] = numer // den
            yield points[keep]

    def lattice_points(self, t: int = 1) -> list[IntPoint]:
        """All integer points of tP in lexicographic order."""
        if t < 0:
            raise ValueError("dilation factor must be nonnegative")
        found = [tuple(int(c) for c in row) for chunk in self._scan(t) for row in chunk]
        found.sort()
        return found

    def count_lattice_points(self, t: int = 1) -> int:
        """|tP intersected with Z^n|."""
        if t < 0:
            raise ValueError("dilation factor must be nonnegative")
        total = sum(len(chunk) for chunk in self._scan(t))
        logger.debug("L(P; %d) = %d", t, total)
        return total

    # Faces

    def faces(self) -> list[Face]:
        """All nonempty faces, P included, sorted by dimension then vertex subset.

        Raises:
            DimensionTooLarge: If dim exceeds the configured face limit
        """
        if self.dim > self.face_dim_limit:
            raise DimensionTooLarge(
                f"face enumeration is limited to dimension {self.face_dim_limit}",
                {"dim": self.dim, "limit": self.face_dim_limit},
            )
        whole = frozenset(range(len(self.vertices)))
        subsets: set[frozenset[int]] = {whole}
        frontier = {f.vertices for f in self.facets}
        facet_sets = list(frontier)
        while frontier:
            subsets |= frontier
            new = set()
            for s in frontier:
                for f in facet_sets:
                    meet = s & f
                    if meet and meet not in subsets:
                        new.add(meet)
            frontier = new
        faces = [
            Face(tuple(sorted(s)), _affine_rank([self.vertices[i] for i in sorted(s)]))
            for s in subsets
        ]
        faces.sort(key=lambda f: (f.dim, f.vertex_subset))
        return faces

    def face_polytope(self, face: Face) -> LatticePolytope:
        return LatticePolytope([self.vertices[i] for i in face.vertex_subset], face_dim_limit=self.face_dim_limit)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return set(self.vertices) == set(other.vertices)

    def __hash__(self) -> int:
        return hash(frozenset(self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope(vertices={len(self.vertices)}, dim={self.dim}, ambient_dim={self.ambient_dim})"


def solve_barycentric(simplex: Sequence[Point], point: Sequence) -> list[Fraction]:
    """Barycentric coordinates of a point with respect to a full-dimensional simplex."""
    n = len(point)
    a = [[v[k] for v in simplex] for k in range(n)] + [[1] * len(simplex)]
    b = [[p] for p in point] + [[1]]
    return [row[0] for row in solve_rational(a, b)]


__all__ = ["LatticePolytope", "Face", "Facet", "as_point", "solve_barycentric"]
