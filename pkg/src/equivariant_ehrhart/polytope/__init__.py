"""Rational polytopes: exact membership, lattice points, faces and Ehrhart series."""

from equivariant_ehrhart.polytope.ehrhart import (
    ehrhart_polynomial,
    ehrhart_quasipolynomial,
    ehrhart_series,
    fit_series,
    hstar_to_ehrhart_polynomial,
)
from equivariant_ehrhart.polytope.lattice import det_one_minus_z, integer_kernel, saturation
from equivariant_ehrhart.polytope.lp import convex_combination, find_feasible_point, in_convex_hull
from equivariant_ehrhart.polytope.polytope import Face, Facet, LatticePolytope, as_point

__all__ = [
    "LatticePolytope",
    "Face",
    "Facet",
    "as_point",
    "ehrhart_series",
    "ehrhart_quasipolynomial",
    "ehrhart_polynomial",
    "hstar_to_ehrhart_polynomial",
    "fit_series",
    "det_one_minus_z",
    "integer_kernel",
    "saturation",
    "find_feasible_point",
    "convex_combination",
    "in_convex_hull",
]
