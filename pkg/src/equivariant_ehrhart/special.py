"""Closed forms for cyclic actions whose nonidentity fixed polytopes are points.

When Z/nZ rotates the coordinates of an (n-1)-dimensional lattice polytope in
R^n and every nonidentity rotation fixes a single lattice point, H* is
determined by the h*-polynomial alone. Prime permutahedra are the main
example; their h*-vector is rebuilt here from the forest tiling of the
permutahedron, which also shows that each coefficient is 1 mod p.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from equivariant_ehrhart.action import PolytopeAction, bind
from equivariant_ehrhart.arith.eulerian import eulerian_polynomial
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.certificates import orbit_polytope, orbit_polytope_action
from equivariant_ehrhart.errors import HypothesisViolated, NotPrime, TooLarge, VerificationFailed
from equivariant_ehrhart.groups.characters import (
    CharacterTable,
    ClassFunction,
    character_table_cyclic,
)
from equivariant_ehrhart.hypersimplex import rotation_matrix
from equivariant_ehrhart.polytope.ehrhart import ehrhart_series
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.zonotope import (
    Edge,
    Graph,
    connectivity_graph,
    halfopen_parallelepiped_volume,
    subforests,
)

logger = logging.getLogger(__name__)

MAX_PRIME = 7

# half-turns of [0,1]^3 about the x- and y-axes, as affine matrices
CUBE_HALF_TURNS = (
    [[1, 0, 0, 0], [0, -1, 0, 1], [0, 0, -1, 1], [0, 0, 0, 1]],
    [[-1, 0, 0, 1], [0, 1, 0, 0], [0, 0, -1, 1], [0, 0, 0, 1]],
)


def permutahedron(n: int) -> LatticePolytope:
    """Pi_n, the convex hull of the permutations of (1, ..., n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return orbit_polytope(range(1, n + 1))


def permutahedron_action(n: int, symmetric: bool = False) -> PolytopeAction:
    """Pi_n under Z/nZ rotating coordinates, or under all of S_n."""
    if symmetric:
        return orbit_polytope_action(list(range(1, n + 1)))
    return bind(permutahedron(n), matrices=[rotation_matrix(n)] if n > 1 else [])


def cube_rotation_action() -> PolytopeAction:
    """The unit 3-cube under the Klein four-group of half-turns about its coordinate axes."""
    vertices = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    return bind(LatticePolytope(vertices), matrices=CUBE_HALF_TURNS)


def _require_rotation_action(action: PolytopeAction) -> None:
    polytope, group = action.polytope, action.group
    n = polytope.ambient_dim
    if polytope.dim != n - 1:
        raise HypothesisViolated(
            f"polytope has dimension {polytope.dim}, expected {n - 1}",
            {"clause": "codimension-one", "dim": polytope.dim, "ambient_dim": n},
        )
    if group.order != n:
        raise HypothesisViolated(
            f"group has order {group.order}, expected {n}",
            {"clause": "cyclic-rotation", "order": group.order},
        )
    rotations = []
    for g in group.elements:
        perm = action.coordinate_permutation(g)
        if perm is None:
            raise HypothesisViolated(
                "some element does not permute coordinates",
                {"clause": "cyclic-rotation", "element": list(g.array_form)},
            )
        rotations.append(perm)
    if not any(perm.order() == n and perm.cycles == 1 for perm in rotations):
        raise HypothesisViolated(
            "the coordinate action is not generated by an n-cycle",
            {"clause": "cyclic-rotation"},
        )
    for rep in group.class_representatives[1:]:
        fixed = action.fixed_polytope(rep).polytope
        if len(fixed.vertices) != 1 or not fixed.is_lattice:
            raise HypothesisViolated(
                "a nonidentity element fixes more than one point or a nonlattice point",
                {"clause": "trivial-fixed", "element": list(rep.array_form),
                 "fixed_vertices": len(fixed.vertices)},
            )


def hstar_trivial_fixed(
    action: PolytopeAction, table: CharacterTable | None = None
) -> Polynomial:
    """H* = sum_i (chi_0 + (h*_i - 1)/n * sum_j chi_j) z^i.

    The hypotheses are checked first: P is (n-1)-dimensional in R^n, the
    group is Z/nZ rotating coordinates, and every nonidentity element fixes
    exactly one lattice point.

    Raises:
        HypothesisViolated: If any hypothesis fails; details name the clause
    """
    _require_rotation_action(action)
    group = action.group
    n = action.polytope.ambient_dim
    table = table or character_table_cyclic(n, group)
    regular = sum(table.irreducibles, ClassFunction.zero(group))
    trivial = ClassFunction.trivial(group)
    hstar = ehrhart_series(action.polytope).numerator
    return Polynomial(
        trivial + regular * Fraction(int(hstar[i]) - 1, n) for i in range(n)
    )


@dataclass(frozen=True)
class PrimePermutahedronReport:
    """h*-vector of the prime permutahedron and its Z/pZ-equivariant form.

    Attributes:
        p: The prime
        hstar: h*_0 .. h*_{p-1}
        closed_form: Per degree, (multiplicity of chi_0 beyond the regular part,
            multiplicity of the regular character) = (1, (h*_i - 1)/p)
        forest_orbits: Number of rotation orbits of nonempty forests on p vertices
    """
    p: int
    hstar: tuple[int, ...]
    closed_form: tuple[tuple[int, int], ...]
    forest_orbits: int


def _rotate(edges: tuple[Edge, ...], shift: int, p: int) -> tuple[Edge, ...]:
    return tuple(sorted(
        tuple(sorted(((u + shift) % p, (v + shift) % p))) for u, v in edges
    ))


def prime_permutahedron_report(p: int) -> PrimePermutahedronReport:
    """Rebuild h*(Pi_p) from the forest tiling, grouped into rotation orbits.

    Pi_p is {0} together with one half-open parallelepiped sum (0, e_j - e_k]
    per nonempty forest on p vertices; a forest with r edges contributes
    vol * A_r(z) / (1 - z)^(r+1). For odd p every rotation orbit of forests
    has size p.

    Raises:
        NotPrime: If p is not prime
        TooLarge: If p exceeds 7
        VerificationFailed: If an orbit is short or a coefficient is not 1 mod p
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime", {"p": p})
    if p > MAX_PRIME:
        raise TooLarge(f"p={p} exceeds {MAX_PRIME}", {"p": p, "limit": MAX_PRIME})

    conn = connectivity_graph(Graph.complete(p), list(range(p)))
    numerator = Polynomial.one_minus_z_power(1, p - 1)
    orbits = 0
    for forest in subforests(conn):
        if not forest.edges:
            continue
        images = {_rotate(forest.edges, s, p) for s in range(p)}
        if forest.edges != min(images):
            continue
        if p > 2 and len(images) != p:
            raise VerificationFailed(
                "a forest is fixed by a nonidentity rotation",
                {"forest": [list(e) for e in forest.edges]},
            )
        orbits += 1
        r = len(forest.edges)
        volume = halfopen_parallelepiped_volume([conn.generator(e) for e in forest.edges])
        term = eulerian_polynomial(r) * Polynomial.one_minus_z_power(1, p - 1 - r)
        numerator = numerator + term.map(lambda c, w=len(images) * volume: w * c)

    hstar = tuple(int(c) for c in numerator.coeffs)
    if p > 2 and any(h % p != 1 for h in hstar):
        raise VerificationFailed(
            "h* coefficients are not all 1 mod p", {"p": p, "hstar": list(hstar)}
        )
    logger.debug("h*(Pi_%d) = %s from %d forest orbits", p, list(hstar), orbits)
    closed_form = tuple((1, (h - 1) // p) for h in hstar)
    return PrimePermutahedronReport(p, hstar, closed_form, orbits)


__all__ = [
    "CUBE_HALF_TURNS",
    "PrimePermutahedronReport",
    "cube_rotation_action",
    "permutahedron",
    "permutahedron_action",
    "hstar_trivial_fixed",
    "prime_permutahedron_report",
]
