"""Half-open decompositions of lattice polytopes and their box points.

An interval [lower, upper] of a partitioned triangulation face poset
contributes the half-open cone of points
sum(lambda_v (v, 1)) with lambda_v > 0 on ``lower`` and lambda_v >= 0 on the
rest of ``upper``. Its box points are the lattice points with every
coefficient in (0, 1] on ``lower`` and [0, 1) on the rest.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import ceil, floor, lcm
from typing import Iterable, Sequence

import numpy as np
from sympy import Matrix

from equivariant_ehrhart.action import PolytopeAction
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.quasipolynomial import series_to_quasipolynomial
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.equivariant import assemble
from equivariant_ehrhart.errors import HypothesisViolated, InvalidInput, NotInCone
from equivariant_ehrhart.polytope.lattice import rank, rref
from equivariant_ehrhart.polytope.polytope import IntPoint, LatticePolytope

logger = logging.getLogger(__name__)

Simplex = frozenset[IntPoint]

# heights checked for the disjoint-union property
VALIDATION_HEIGHTS = (1, 2, 3)


def _points(values: Iterable[Sequence[int]]) -> Simplex:
    return frozenset(tuple(int(c) for c in p) for p in values)


@dataclass(frozen=True)
class Interval:
    """Interval [lower, upper] of the face poset of a triangulation.

    Attributes:
        lower: Points of the smallest face of the interval
        upper: Points of the largest face of the interval
    """
    lower: Simplex
    upper: Simplex

    @classmethod
    def of(cls, lower: Iterable[Sequence[int]], upper: Iterable[Sequence[int]]) -> Interval:
        return cls(_points(lower), _points(upper))

    @property
    def dim(self) -> int:
        return len(self.upper) - 1

    def __contains__(self, face: Simplex) -> bool:
        return self.lower <= face <= self.upper

    @cached_property
    def order(self) -> tuple[IntPoint, ...]:
        """Points of ``upper`` with those of ``lower`` first, each part sorted."""
        return tuple(sorted(self.lower)) + tuple(sorted(self.upper - self.lower))


@dataclass(frozen=True)
class Triangulation:
    """Lattice triangulation of a polytope by simplices of possibly mixed dimension.

    Attributes:
        polytope: The triangulated polytope
        maximal_simplices: Point sets of the maximal simplices
    """
    polytope: LatticePolytope
    maximal_simplices: tuple[Simplex, ...]

    def __post_init__(self) -> None:
        for simplex in self.maximal_simplices:
            if not simplex:
                raise InvalidInput("a maximal simplex needs at least one point")
            homogeneous = [list(p) + [1] for p in simplex]
            if rank(homogeneous) != len(simplex):
                raise InvalidInput(
                    "simplex points are not affinely independent",
                    {"simplex": sorted(map(list, simplex))},
                )
            for p in simplex:
                if len(p) != self.polytope.ambient_dim or not self.polytope.contains(p):
                    raise InvalidInput(f"point {list(p)} is not a lattice point of the polytope")

    @classmethod
    def of(cls, polytope: LatticePolytope, simplices: Iterable[Iterable[Sequence[int]]]) -> Triangulation:
        return cls(polytope, tuple(_points(s) for s in simplices))

    @cached_property
    def face_poset(self) -> frozenset[Simplex]:
        """Every face of every maximal simplex, the empty face included."""
        faces: set[Simplex] = set()
        for simplex in self.maximal_simplices:
            points = sorted(simplex)
            for size in range(len(points) + 1):
                faces.update(frozenset(c) for c in combinations(points, size))
        return frozenset(faces)


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[Interval, ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable, Iterable]]) -> IntervalPartition:
        return cls(tuple(Interval.of(lower, upper) for lower, upper in pairs))


@dataclass(frozen=True)
class Violation:
    """One failed check of a half-open decomposition.

    Attributes:
        kind: Machine-readable violation name
        detail: Structured description
    """
    kind: str
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class BoxPoints:
    """Lattice points of the half-open parallelepiped of an interval.

    Attributes:
        interval: The interval
        points_by_height: Height -> sorted homogenized points (last coordinate = height)
    """
    interval: Interval
    points_by_height: dict[int, tuple[IntPoint, ...]]

    def all_points(self) -> list[IntPoint]:
        return [p for h in sorted(self.points_by_height) for p in self.points_by_height[h]]


@dataclass(frozen=True)
class ConeDecomposition:
    """x = w + y with w in the semigroup of the interval and y a box point.

    Attributes:
        interval_index: Index of the unique interval whose cone contains x
        coefficients: Nonnegative integer coefficients of w, aligned with ``Interval.order``
        w: The lattice combination of homogenized vertices
        y: The box point
    """
    interval_index: int
    coefficients: tuple[int, ...]
    w: IntPoint
    y: IntPoint


class _ConeFrame:
    """Exact coefficient solver for the homogenized points of one interval."""

    def __init__(self, interval: Interval) -> None:
        self.interval = interval
        self.columns = [list(p) + [1] for p in interval.order]
        self.size = len(self.columns)
        self.lower_size = len(interval.lower)
        if not self.columns:
            self.rows: tuple[int, ...] = ()
            self.adjugate = np.zeros((0, 0), dtype=np.int64)
            self.det = 1
            return
        _reduced, rows = rref(self.columns)  # pivots = independent coordinates
        self.rows = rows
        square = Matrix([[self.columns[j][r] for j in range(self.size)] for r in rows])
        det = int(square.det())
        adjugate = square.adjugate()
        sign = 1 if det > 0 else -1
        self.det = abs(det)
        self.adjugate = np.array(
            [[sign * int(adjugate[i, j]) for j in range(self.size)] for i in range(self.size)],
            dtype=np.int64,
        )
        self.matrix = np.array(self.columns, dtype=np.int64).T  # (n+1) x k

    def scaled_coefficients(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """det * lambda for each row of ``points`` and a mask of points in the span."""
        if not self.size:
            return np.zeros((len(points), 0), dtype=np.int64), ~points.any(axis=1)
        picked = points[:, list(self.rows)]
        scaled = picked @ self.adjugate.T
        in_span = (scaled @ self.matrix.T == self.det * points).all(axis=1)
        return scaled, in_span

    def coefficients(self, point: Sequence[int]) -> list[Fraction] | None:
        scaled, in_span = self.scaled_coefficients(np.array([list(point)], dtype=np.int64))
        if not in_span[0]:
            return None
        return [Fraction(int(v), self.det) for v in scaled[0]]

    def in_half_open_cone(self, point: Sequence[int]) -> list[Fraction] | None:
        lam = self.coefficients(point)
        if lam is None:
            return None
        if any(c <= 0 for c in lam[:self.lower_size]) or any(c < 0 for c in lam[self.lower_size:]):
            return None
        return lam


def validate_decomposition(
    triangulation: Triangulation, parts: IntervalPartition
) -> ValidationReport:
    """Check that the intervals partition the face poset into a half-open decomposition.

    Besides the poset conditions, every lattice point of the cone over P at
    heights 1..3 must lie in exactly one half-open cone, and the normalized
    volumes of the full-dimensional simplices must add up to that of P.
    """
    violations: list[Violation] = []
    poset = triangulation.face_poset
    for index, interval in enumerate(parts.intervals):
        if not interval.lower <= interval.upper:
            violations.append(Violation("not-an-interval", {"interval": index}))
        elif interval.upper not in poset:
            violations.append(Violation("not-a-face", {"interval": index}))
        if not interval.upper:
            violations.append(Violation("empty-set-alone", {"interval": index}))

    for face in sorted(poset, key=lambda f: (len(f), sorted(f))):
        owners = [i for i, interval in enumerate(parts.intervals) if face in interval]
        if not owners:
            violations.append(Violation("uncovered-face", {"face": sorted(map(list, face))}))
        elif len(owners) > 1:
            violations.append(
                Violation("double-covered-face", {"face": sorted(map(list, face)), "intervals": owners})
            )
    if violations:
        return ValidationReport(tuple(violations))

    polytope = triangulation.polytope
    volume = _normalized_volume(polytope)
    simplex_volume = sum(
        _simplex_volume(polytope, simplex)
        for simplex in triangulation.maximal_simplices
        if len(simplex) == polytope.dim + 1
    )
    if simplex_volume != volume:
        violations.append(Violation("volume-mismatch", {"polytope": volume, "simplices": simplex_volume}))

    frames = [_ConeFrame(interval) for interval in parts.intervals]
    for t in VALIDATION_HEIGHTS:
        for point in polytope.lattice_points(t):
            x = list(point) + [t]
            owners = [i for i, frame in enumerate(frames) if frame.in_half_open_cone(x) is not None]
            if len(owners) == 0:
                violations.append(Violation("cone-point-uncovered", {"point": x}))
            elif len(owners) > 1:
                violations.append(Violation("cone-point-double-covered", {"point": x, "intervals": owners}))
    return ValidationReport(tuple(violations))


def _normalized_volume(polytope: LatticePolytope) -> int:
    from equivariant_ehrhart.polytope.ehrhart import ehrhart_series

    return int(sum(ehrhart_series(polytope).numerator.coeffs))


def _simplex_volume(polytope: LatticePolytope, simplex: Simplex) -> int:
    """Normalized volume of a full-dimensional simplex, relative to the affine lattice."""
    coords = [polytope.lattice_coordinates(list(p) + [1]) for p in sorted(simplex)]
    return abs(int(Matrix(coords).det()))


def box_points(interval: Interval) -> BoxPoints:
    """Enumerate Box(I) by scanning the bounding box of the closed parallelepiped."""
    if not interval.upper:
        raise InvalidInput("box points need a nonempty upper face")
    frame = _ConeFrame(interval)
    columns = frame.columns
    dim = len(columns[0])
    lows = [sum(min(0, c[k]) for c in columns) for k in range(dim)]
    highs = [sum(max(0, c[k]) for c in columns) for k in range(dim)]
    grids = np.meshgrid(*[np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)], indexing="ij")
    candidates = np.stack([g.ravel() for g in grids], axis=1)
    scaled, in_span = frame.scaled_coefficients(candidates)
    mask = in_span
    det = frame.det
    lower = frame.lower_size
    if lower:
        mask &= ((scaled[:, :lower] > 0) & (scaled[:, :lower] <= det)).all(axis=1)
    if frame.size > lower:
        mask &= ((scaled[:, lower:] >= 0) & (scaled[:, lower:] < det)).all(axis=1)
    by_height: dict[int, list[IntPoint]] = {}
    for row in candidates[mask]:
        point = tuple(int(c) for c in row)
        by_height.setdefault(point[-1], []).append(point)
    return BoxPoints(interval, {h: tuple(sorted(ps)) for h, ps in sorted(by_height.items())})


def decompose_cone_point(
    triangulation: Triangulation, parts: IntervalPartition, x: Sequence[int]
) -> ConeDecomposition:
    """Write a lattice point of Cone(P) as a semigroup element plus a box point.

    Raises:
        NotInCone: If x lies in no half-open cone of the decomposition
    """
    point = [int(c) for c in x]
    if len(point) != triangulation.polytope.ambient_dim + 1 or point[-1] < 0:
        raise NotInCone(f"{point} is not a point of the cone over the polytope", {"point": point})
    for index, interval in enumerate(parts.intervals):
        frame = _ConeFrame(interval)
        lam = frame.in_half_open_cone(point)
        if lam is None:
            continue
        coefficients = tuple(
            ceil(c) - 1 if i < frame.lower_size else floor(c) for i, c in enumerate(lam)
        )
        w = [0] * len(point)
        for c, column in zip(coefficients, frame.columns):
            for k in range(len(point)):
                w[k] += c * column[k]
        y = tuple(a - b for a, b in zip(point, w))
        return ConeDecomposition(index, coefficients, tuple(w), y)
    raise NotInCone(f"{point} is not covered by the decomposition", {"point": point})


# Group-invariant decompositions


def _image_point(action: PolytopeAction, g, point: IntPoint) -> IntPoint:
    image = action.apply(g, point)
    if any(c.denominator != 1 for c in image):
        raise HypothesisViolated("the group maps a triangulation point off the lattice", {"clause": "invariance"})
    return tuple(int(c) for c in image)


def _image_interval(action: PolytopeAction, g, interval: Interval) -> Interval:
    return Interval(
        frozenset(_image_point(action, g, p) for p in interval.lower),
        frozenset(_image_point(action, g, p) for p in interval.upper),
    )


def _check_invariance(action: PolytopeAction, triangulation: Triangulation, parts: IntervalPartition) -> None:
    simplices = set(triangulation.maximal_simplices)
    intervals = set(parts.intervals)
    for g in action.group.generators:
        for simplex in simplices:
            image = frozenset(_image_point(action, g, p) for p in simplex)
            if image not in simplices:
                raise HypothesisViolated(
                    "the triangulation is not invariant",
                    {"clause": "simplices-to-simplices", "simplex": sorted(map(list, simplex))},
                )
        for interval in intervals:
            if _image_interval(action, g, interval) not in intervals:
                raise HypothesisViolated(
                    "the interval partition is not invariant",
                    {"clause": "intervals-to-intervals", "lower": sorted(map(list, interval.lower)),
                     "upper": sorted(map(list, interval.upper))},
                )


def interval_orbits(action: PolytopeAction, parts: IntervalPartition) -> list[list[int]]:
    """Orbits of intervals (as index lists) under the group."""
    index = {interval: i for i, interval in enumerate(parts.intervals)}
    seen: set[int] = set()
    orbits = []
    for i, interval in enumerate(parts.intervals):
        if i in seen:
            continue
        orbit = sorted({index[_image_interval(action, g, interval)] for g in action.group.elements})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def _fixed_count(action: PolytopeAction, g, points: Iterable[IntPoint]) -> int:
    a = action.matrix(g)
    count = 0
    for p in points:
        image = [sum(a[i][k] * p[k] for k in range(len(p))) for i in range(len(p))]
        if all(u == v for u, v in zip(image, p)):
            count += 1
    return count


def _box_character(action: PolytopeAction, points_by_height: dict[int, list[IntPoint]]) -> Polynomial:
    group = action.group
    top = max(points_by_height, default=-1)
    per_class = []
    for rep in group.class_representatives:
        per_class.append(Polynomial(
            _fixed_count(action, rep, points_by_height.get(h, [])) for h in range(top + 1)
        ))
    return assemble(group, per_class)


@dataclass(frozen=True)
class PermrepResult:
    """H* as graded permutation characters on box points.

    Attributes:
        hstar: Polynomial with ClassFunction coefficients
        invariant_interval: Index of the unique invariant interval
        notes: Non-fatal observations about the hypotheses
    """
    hstar: Polynomial
    invariant_interval: int
    notes: tuple[str, ...] = ()


def hstar_via_permrep(
    triangulation: Triangulation, parts: IntervalPartition, action: PolytopeAction
) -> PermrepResult:
    """H*(P; z) = sum_i chi_{Box_i} z**i for a suitable invariant decomposition.

    Raises:
        HypothesisViolated: If some upper face is not full-dimensional, the
            decomposition is not invariant, or the interval orbits are not all
            regular apart from a single invariant interval
    """
    d = triangulation.polytope.dim
    for i, interval in enumerate(parts.intervals):
        if interval.dim != d:
            raise HypothesisViolated(
                f"interval {i} has an upper face of dimension {interval.dim}, expected {d}",
                {"clause": "full-dimensional-upper", "interval": i},
            )
    _check_invariance(action, triangulation, parts)
    orbits = interval_orbits(action, parts)
    order = action.group.order
    fixed = [orbit for orbit in orbits if len(orbit) == 1]
    irregular = [orbit for orbit in orbits if len(orbit) not in (1, order)]
    if irregular or len(fixed) != 1:
        raise HypothesisViolated(
            "interval orbits must be regular except for one invariant interval",
            {"clause": "orbit-sizes", "orbit_sizes": sorted(len(o) for o in orbits)},
        )
    invariant = fixed[0][0]
    notes = []
    barycenter = list(triangulation.polytope.barycenter) + [Fraction(1)]
    if not _closed_cone_contains(parts.intervals[invariant], barycenter):
        message = "the invariant interval does not contain the fixed barycenter"
        logger.warning(message)
        notes.append(message)

    points_by_height: dict[int, list[IntPoint]] = {}
    for interval in parts.intervals:
        for h, points in box_points(interval).points_by_height.items():
            points_by_height.setdefault(h, []).extend(points)
    return PermrepResult(_box_character(action, points_by_height), invariant, tuple(notes))


def _closed_cone_contains(interval: Interval, point: Sequence[Fraction]) -> bool:
    den = lcm(1, *(c.denominator for c in point))
    lam = _ConeFrame(interval).coefficients([int(c * den) for c in point])
    return lam is not None and all(c >= 0 for c in lam)


@dataclass(frozen=True)
class OrbitSeriesResult:
    """EE(P; z) from interval orbits, as numerator / (1 - z)**(d+1).

    Attributes:
        numerator: Polynomial with ClassFunction coefficients
        dim: d
        chi_tP: chi_tP as a polynomial in t with ClassFunction coefficients
    """
    numerator: Polynomial
    dim: int
    chi_tP: Polynomial

    def at_class(self, index: int) -> RationalSeries:
        return RationalSeries.over(
            self.numerator.map(lambda c: c.values[index].to_fraction()), 1, self.dim + 1
        )


def ee_via_orbits(
    triangulation: Triangulation, parts: IntervalPartition, action: PolytopeAction
) -> OrbitSeriesResult:
    """EE(P; z) = sum over interval orbits of (1-z)**(d - dim O) * sum_i chi_{Box(O)_i} z**i.

    Raises:
        HypothesisViolated: If some interval is a single d-face, the
            decomposition is not invariant, or some g fixes a box point of an
            interval without fixing its upper face pointwise
    """
    d = triangulation.polytope.dim
    for i, interval in enumerate(parts.intervals):
        if interval.lower == interval.upper and interval.dim == d:
            raise HypothesisViolated(
                f"interval {i} consists of a single {d}-face",
                {"clause": "single-top-face", "interval": i},
            )
    _check_invariance(action, triangulation, parts)
    boxes = [box_points(interval) for interval in parts.intervals]
    for i, (interval, box) in enumerate(zip(parts.intervals, boxes)):
        points = box.all_points()
        for g in action.group.elements:
            if not _fixed_count(action, g, points):
                continue
            if any(_image_point(action, g, p) != p for p in interval.upper):
                raise HypothesisViolated(
                    f"an element fixes a box point of interval {i} but moves its upper face",
                    {"clause": "fixed-box-point", "interval": i, "element": list(g.array_form)},
                )

    group = action.group
    numerator: Polynomial = Polynomial()
    for orbit in interval_orbits(action, parts):
        points_by_height: dict[int, list[IntPoint]] = {}
        for i in orbit:
            for h, points in boxes[i].points_by_height.items():
                points_by_height.setdefault(h, []).extend(points)
        character = _box_character(action, points_by_height)
        shift = Polynomial.one_minus_z_power(1, d - parts.intervals[orbit[0]].dim)
        numerator = numerator + character * shift

    per_class = [
        series_to_quasipolynomial(
            RationalSeries.over(numerator.map(lambda c, i=i: c.values[i].to_fraction()), 1, d + 1), 1
        ).constituents[0]
        for i in range(len(group.conjugacy_classes))
    ]
    return OrbitSeriesResult(numerator, d, assemble(group, per_class))


__all__ = [
    "Interval",
    "Triangulation",
    "IntervalPartition",
    "Violation",
    "ValidationReport",
    "BoxPoints",
    "ConeDecomposition",
    "PermrepResult",
    "OrbitSeriesResult",
    "validate_decomposition",
    "box_points",
    "decompose_cone_point",
    "interval_orbits",
    "hstar_via_permrep",
    "ee_via_orbits",
]
