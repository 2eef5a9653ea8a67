"""Certificates for invariant nondegenerate hypersurfaces.

Two criteria are implemented. The positive one: if every face Q of dimension
at least 2 contains a lattice point fixed by its stabilizer G_Q, the
G-invariant linear system is basepoint free and an invariant nondegenerate
hypersurface exists. The negative one applies to orbit polytopes of S_n: a
rectangular 2-face with odd side lengths forces every invariant hypersurface
to be singular along it. Anything else is reported as inconclusive.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Literal, Sequence

from sympy.combinatorics import Permutation

from equivariant_ehrhart.action import PolytopeAction, bind
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.errors import DimensionTooLarge, InvalidInput
from equivariant_ehrhart.hypersimplex import rotation_matrix
from equivariant_ehrhart.polytope.polytope import Face, LatticePolytope

logger = logging.getLogger(__name__)

VerdictKind = Literal["exists", "not-exists", "inconclusive"]


@dataclass(frozen=True)
class Composition:
    """Multiplicities of the distinct coordinates of an orbit-polytope generator.

    Attributes:
        parts: alpha_1 .. alpha_k
        levels: w_1 < ... < w_k
    """
    parts: tuple[int, ...]
    levels: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    def gaps(self) -> list[int]:
        return [b - a for a, b in zip(self.levels, self.levels[1:])]


@dataclass(frozen=True)
class HypersurfaceVerdict:
    """Outcome of the hypersurface criteria.

    Attributes:
        kind: "exists", "not-exists" or "inconclusive"
        fixed_points: For "exists", a G_Q-fixed lattice point per face (by vertex subset)
        witness: For "not-exists", the odd-rectangle criterion and its gap indices (1-based)
        failing_faces: For "inconclusive", faces without a G_Q-fixed lattice point
        notes: Provenance remarks
    """
    kind: VerdictKind
    fixed_points: dict[tuple[int, ...], tuple] = field(default_factory=dict)
    witness: dict | None = None
    failing_faces: tuple[tuple[int, ...], ...] = ()
    notes: tuple[str, ...] = ()

    def with_notes(self, *notes: str) -> HypersurfaceVerdict:
        return HypersurfaceVerdict(
            self.kind, self.fixed_points, self.witness, self.failing_faces, self.notes + notes
        )

    def to_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "fixed_points": [
                {"face": list(face), "point": [str(c) for c in point]}
                for face, point in self.fixed_points.items()
            ],
            "witness": self.witness,
            "failing_faces": [list(face) for face in self.failing_faces],
            "notes": list(self.notes),
        }


def stabilizer(action: PolytopeAction, face: Face) -> list[Permutation]:
    """G_Q: elements mapping the vertex set of the face onto itself."""
    members = set(face.vertex_subset)
    return [g for g in action.group.elements if {g(i) for i in members} == members]


def _fixed_lattice_point(action: PolytopeAction, face: Face, group: list[Permutation]):
    candidates = action.polytope.face_polytope(face).lattice_points()
    for point in candidates:
        if all(action.apply(g, point) == tuple(Fraction(c) for c in point) for g in group):
            return point
    return None


def sufficient_certificate(
    action: PolytopeAction, config: ComputeConfig | None = None
) -> HypersurfaceVerdict:
    """Search every face of dimension >= 2 for a lattice point fixed by its stabilizer.

    Raises:
        DimensionTooLarge: If the polytope dimension exceeds the certificate limit
    """
    config = config or ComputeConfig()
    polytope = action.polytope
    if polytope.dim > config.certificate_dim_limit:
        raise DimensionTooLarge(
            f"certificates are limited to dimension {config.certificate_dim_limit}",
            {"dim": polytope.dim, "limit": config.certificate_dim_limit},
        )
    fixed: dict[tuple[int, ...], tuple] = {}
    failing = []
    for face in polytope.faces():
        if face.dim < 2:
            continue
        group = stabilizer(action, face)
        point = _fixed_lattice_point(action, face, group)
        if point is None:
            logger.debug("Face %s (|G_Q| = %d) has no fixed lattice point", face.vertex_subset, len(group))
            failing.append(face.vertex_subset)
        else:
            fixed[face.vertex_subset] = point
    if failing:
        return HypersurfaceVerdict("inconclusive", failing_faces=tuple(failing))
    return HypersurfaceVerdict("exists", fixed_points=fixed)


# Orbit polytopes


def composition_of_orbit_polytope(point: Sequence[int]) -> Composition:
    """Sorted distinct coordinates and their multiplicities."""
    counts = Counter(int(c) for c in point)
    levels = tuple(sorted(counts))
    return Composition(tuple(counts[w] for w in levels), levels)


def orbit_polytope(point: Sequence[int]) -> LatticePolytope:
    """Convex hull of all coordinate permutations of a point."""
    return LatticePolytope(sorted(set(permutations(int(c) for c in point))))


def orbit_polytope_action(point: Sequence[int]) -> PolytopeAction:
    """S_n permuting the coordinates of the orbit polytope."""
    n = len(point)
    transposition = [[1 if (i, j) in ((0, 1), (1, 0)) or (i == j and i > 1) else 0
                      for j in range(n)] for i in range(n)]
    matrices = [transposition, rotation_matrix(n)] if n > 1 else []
    return bind(orbit_polytope(point), matrices=matrices, order_cap=max(factorial(n), 1))


def has_rectangular_2face(composition: Composition) -> bool:
    """Four or more parts, or three parts with a middle part of size at least 2."""
    parts = composition.parts
    return len(parts) >= 4 or (len(parts) == 3 and parts[1] >= 2)


def odd_rectangle_obstruction(composition: Composition) -> HypersurfaceVerdict:
    """Detect a rectangular 2-face with odd side lengths from the composition.

    Either two non-adjacent gaps w_{i+1} - w_i and w_{j+1} - w_j are odd, or
    two adjacent gaps around a level of multiplicity at least 2 are odd.
    """
    gaps = composition.gaps()
    parts = composition.parts
    for i, j in combinations(range(len(gaps)), 2):
        if j > i + 1 and gaps[i] % 2 and gaps[j] % 2:
            return HypersurfaceVerdict("not-exists", witness={
                "criterion": "separated-odd-gaps", "i": i + 1, "j": j + 1,
                "gaps": [gaps[i], gaps[j]],
            })
    for i in range(len(gaps) - 1):
        if parts[i + 1] >= 2 and gaps[i] % 2 and gaps[i + 1] % 2:
            return HypersurfaceVerdict("not-exists", witness={
                "criterion": "adjacent-odd-gaps", "i": i + 1, "multiplicity": parts[i + 1],
                "gaps": [gaps[i], gaps[i + 1]],
            })
    reason = "odd rectangle" if has_rectangular_2face(composition) else "rectangular 2-face"
    return HypersurfaceVerdict("inconclusive", notes=(f"no {reason} found",))


def find_rectangular_2face(polytope: LatticePolytope) -> Face | None:
    """A 2-face with four vertices forming a rectangle, if any."""
    for face in polytope.faces():
        if face.dim != 2 or len(face.vertex_subset) != 4:
            continue
        points = [polytope.vertices[i] for i in face.vertex_subset]
        a = points[0]
        for b, c, d in permutations(points[1:]):
            side1 = [y - x for x, y in zip(a, b)]
            side2 = [y - x for x, y in zip(a, d)]
            closes = all(cc == aa + s1 + s2 for aa, cc, s1, s2 in zip(a, c, side1, side2))
            if closes and sum(s1 * s2 for s1, s2 in zip(side1, side2)) == 0:
                return face
    return None


def _is_symmetric_orbit_action(action: PolytopeAction, point: Sequence[int]) -> bool:
    n = len(point)
    expected = set(permutations(Fraction(int(c)) for c in point))
    if set(action.polytope.vertices) != expected:
        return False
    if action.group.order != factorial(n):
        return False
    return all(action.coordinate_permutation(g) is not None for g in action.group.generators)


def hypersurface_verdict(
    action: PolytopeAction,
    orbit_point: Sequence[int] | None = None,
    config: ComputeConfig | None = None,
) -> HypersurfaceVerdict:
    """Run the positive certificate, then the odd-rectangle obstruction when it applies.

    The obstruction is only consulted for S_n acting on the orbit polytope of
    ``orbit_point``. A positive verdict carries over to every subgroup.
    """
    verdict = sufficient_certificate(action, config)
    if verdict.kind == "exists":
        return verdict.with_notes("the same hypersurface is invariant under every subgroup")
    if orbit_point is None:
        return verdict
    if not _is_symmetric_orbit_action(action, orbit_point):
        raise InvalidInput(
            "orbit point does not generate the polytope under the full symmetric group",
            {"orbit_point": [int(c) for c in orbit_point]},
        )
    composition = composition_of_orbit_polytope(orbit_point)
    obstruction = odd_rectangle_obstruction(composition)
    if obstruction.kind == "not-exists":
        return obstruction
    notes = verdict.notes + obstruction.notes
    if composition.levels == (0, 1):
        notes += (
            "hypersimplex: an S_n-invariant nondegenerate hypersurface is known to exist "
            "(elementary symmetric polynomial); not certified by this computation",
        )
    return HypersurfaceVerdict("inconclusive", failing_faces=verdict.failing_faces, notes=notes)


__all__ = [
    "Composition",
    "HypersurfaceVerdict",
    "stabilizer",
    "sufficient_certificate",
    "composition_of_orbit_polytope",
    "orbit_polytope",
    "orbit_polytope_action",
    "has_rectangular_2face",
    "odd_rectangle_obstruction",
    "find_rectangular_2face",
    "hypersurface_verdict",
]
