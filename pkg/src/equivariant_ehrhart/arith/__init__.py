"""Exact arithmetic: cyclotomic numbers, polynomials, rational series, quasipolynomials."""

from equivariant_ehrhart.arith.cyclotomic import Cyclotomic
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.series import (
    NotPolynomial,
    RationalFunction,
    RationalSeries,
    series_add,
    series_mul,
    series_to_polynomial,
)
from equivariant_ehrhart.arith.quasipolynomial import (
    Quasipolynomial,
    series_to_quasipolynomial,
)
from equivariant_ehrhart.arith.eulerian import eulerian_polynomial, generalized_binomial


def cyclotomic_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    """Exact product, conductors merged to their lcm."""
    return a * b


__all__ = [
    "Cyclotomic",
    "cyclotomic_mul",
    "Polynomial",
    "RationalSeries",
    "RationalFunction",
    "NotPolynomial",
    "series_add",
    "series_mul",
    "series_to_polynomial",
    "Quasipolynomial",
    "series_to_quasipolynomial",
    "eulerian_polynomial",
    "generalized_binomial",
]
