"""Ehrhart counting and generating functions of rational polytopes."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.quasipolynomial import Quasipolynomial, series_to_quasipolynomial
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.errors import DegreeExceedsDimension, InvalidInput, VerificationFailed
from equivariant_ehrhart.polytope.polytope import LatticePolytope

logger = logging.getLogger(__name__)

# extra dilates recounted to confirm a fitted numerator
VERIFY_DILATES = 2


def fit_series(count: Callable[[int], int], period: int, power: int) -> RationalSeries:
    """Fit h(z) / (1 - z**period)**power to the counting function ``count``.

    The numerator has degree < period * power, so it is determined by the
    first period * power values; two more values are recounted as a check.

    Raises:
        VerificationFailed: If the recounted values disagree with the fit
    """
    length = period * power
    values = [count(t) for t in range(length + VERIFY_DILATES)]
    numerator = (Polynomial(values[:length]) * Polynomial.one_minus_z_power(period, power)).truncate(length)
    series = RationalSeries.over(numerator, period, power)
    predicted = series.coefficients(length + VERIFY_DILATES)
    if predicted[length:] != values[length:]:
        raise VerificationFailed(
            "fitted Ehrhart series disagrees with recounted dilates",
            {"expected": values[length:], "predicted": [int(v) for v in predicted[length:]]},
        )
    return series


def ehrhart_series(polytope: LatticePolytope) -> RationalSeries:
    """Ehr_P(z) = h*(z) / (1 - z**k)**(d+1) with k the denominator of P."""
    k, d = polytope.denominator, polytope.dim
    series = fit_series(polytope.count_lattice_points, k, d + 1)
    logger.debug("Ehrhart numerator %s over (1 - z^%d)^%d", list(series.numerator.coeffs), k, d + 1)
    return series


def ehrhart_quasipolynomial(polytope: LatticePolytope) -> Quasipolynomial:
    """L_P(t) as a quasipolynomial of period dividing the denominator."""
    return series_to_quasipolynomial(ehrhart_series(polytope)).normalized()


def hstar_to_ehrhart_polynomial(hstar: Polynomial, d: int) -> Polynomial[Fraction]:
    """L_P(t) = sum_i h*_i * binom(t + d - i, d).

    Raises:
        DegreeExceedsDimension: If deg(h*) > d
    """
    if hstar.degree > d:
        raise DegreeExceedsDimension(
            f"h* has degree {hstar.degree} > dimension {d}",
            {"degree": hstar.degree, "dim": d},
        )
    total: Polynomial = Polynomial()
    for i, h in enumerate(hstar.coeffs):
        if not h:
            continue
        # binom(t + d - i, d) = prod_{j=1..d} (t - i + j) / j
        basis: Polynomial = Polynomial.constant(Fraction(1))
        for j in range(1, d + 1):
            basis = basis * Polynomial((Fraction(j - i, j), Fraction(1, j)))
        total = total + basis.map(lambda c, h=h: c * h)
    return total


def ehrhart_polynomial(polytope: LatticePolytope) -> Polynomial[Fraction]:
    """Ehrhart polynomial of a lattice polytope."""
    if not polytope.is_lattice:
        raise InvalidInput("only lattice polytopes have an Ehrhart polynomial; use ehrhart_quasipolynomial")
    return hstar_to_ehrhart_polynomial(ehrhart_series(polytope).numerator, polytope.dim)


__all__ = [
    "fit_series",
    "ehrhart_series",
    "ehrhart_quasipolynomial",
    "hstar_to_ehrhart_polynomial",
    "ehrhart_polynomial",
]
