"""Quasipolynomials and their extraction from rational series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.series import RationalSeries, lcm_of_periods
from equivariant_ehrhart.errors import NonstandardDenominator


@dataclass(frozen=True)
class Quasipolynomial:
    """Function of t that is a polynomial on each residue class mod ``period``.

    Attributes:
        period: N
        constituents: One polynomial in t per residue class 0 .. N-1
    """

    period: int
    constituents: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue class")

    @classmethod
    def polynomial(cls, poly: Polynomial) -> Quasipolynomial:
        return cls(1, (poly,))

    def evaluate(self, t: int) -> Any:
        return self.constituents[t % self.period].evaluate(t)

    def map(self, fn: Callable[[Any], Any]) -> Quasipolynomial:
        return Quasipolynomial(self.period, tuple(c.map(fn) for c in self.constituents))

    def normalized(self) -> Quasipolynomial:
        """Same function with the smallest period."""
        for p in range(1, self.period + 1):
            if self.period % p:
                continue
            if all(self.constituents[r] == self.constituents[r % p] for r in range(self.period)):
                return Quasipolynomial(p, self.constituents[:p])
        return self

    @property
    def is_polynomial(self) -> bool:
        return self.normalized().period == 1


def _binomial_in_t(residue: int, period: int, shift: int, depth: int) -> Polynomial[Fraction]:
    """binom((t - residue)/period - shift + depth, depth) as a polynomial in t."""
    result: Polynomial = Polynomial.constant(Fraction(1))
    for j in range(1, depth + 1):
        offset = Fraction(-residue - period * shift + period * j, period * j)
        result = result * Polynomial((offset, Fraction(1, period * j)))
    return result


def series_to_quasipolynomial(
    series: RationalSeries, period: int | None = None
) -> Quasipolynomial:
    """Quasipolynomial whose value at t >= 0 is the t-th series coefficient.

    The series is rewritten over (1 - z**N)**D and each residue class of the
    numerator is pushed through the binomial transform
    sum_i h_i * binom((t - i)/N + D - 1, D - 1).

    Args:
        series: Series to convert
        period: N; defaults to the lcm of the denominator exponents

    Raises:
        NonstandardDenominator: If the rewrite is impossible or the numerator
            degree reaches N * D (the coefficients would not be quasipolynomial
            from t = 0 on)
    """
    if period is None:
        period = lcm_of_periods([series.denominator_factors])
    power = series.pole_order
    rewritten = series.over_common_period(period, power)
    numerator = rewritten.numerator
    if numerator.degree >= period * power:
        raise NonstandardDenominator(
            f"numerator degree {numerator.degree} is not below {period * power}",
            {"degree": numerator.degree, "bound": period * power},
        )
    constituents = []
    for r in range(period):
        total: Polynomial = Polynomial()
        for i in range(r, numerator.degree + 1, period):
            h = numerator[i]
            if not h:
                continue
            basis = _binomial_in_t(r, period, (i - r) // period, power - 1)
            total = total + basis.map(lambda c, h=h: h * c)
        constituents.append(total)
    return Quasipolynomial(period, tuple(constituents))


__all__ = ["Quasipolynomial", "series_to_quasipolynomial"]
