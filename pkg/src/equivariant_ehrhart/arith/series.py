"""Rational generating functions with structured denominators.

A :class:`RationalSeries` is ``numerator / prod((1 - z**a)**m)``. The
numerator may have coefficients in any ring supported by
:class:`~equivariant_ehrhart.arith.polynomial.Polynomial`; equality is always
decided by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Iterable

from equivariant_ehrhart.arith.polynomial import (
    Polynomial,
    divide_by_one_minus_z_power,
    from_sympy,
    rational_gcd,
    to_sympy,
)
from equivariant_ehrhart.errors import NonstandardDenominator

Factors = tuple[tuple[int, int], ...]


def _normalize_factors(factors: Iterable[tuple[int, int]]) -> Factors:
    merged: dict[int, int] = {}
    for a, m in factors:
        if a < 1 or m < 0:
            raise ValueError(f"invalid denominator factor (1 - z^{a})^{m}")
        if m:
            merged[a] = merged.get(a, 0) + m
    return tuple(sorted(merged.items()))


def factors_polynomial(factors: Factors) -> Polynomial[int]:
    """Expand prod((1 - z**a)**m) into an integer polynomial."""
    result: Polynomial = Polynomial.constant(1)
    for a, m in factors:
        result = result * Polynomial.one_minus_z_power(a, m)
    return result


@dataclass(frozen=True)
class RationalSeries:
    """Power series numerator / prod((1 - z**a)**m).

    Attributes:
        numerator: Numerator polynomial
        denominator_factors: Sorted (a, m) pairs with positive multiplicities
    """

    numerator: Polynomial
    denominator_factors: Factors = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "denominator_factors", _normalize_factors(self.denominator_factors)
        )

    @classmethod
    def over(cls, numerator, a: int, m: int) -> RationalSeries:
        """Series numerator / (1 - z**a)**m."""
        if not isinstance(numerator, Polynomial):
            numerator = Polynomial(numerator)
        return cls(numerator, ((a, m),))

    @property
    def denominator(self) -> Polynomial[int]:
        return factors_polynomial(self.denominator_factors)

    @property
    def pole_order(self) -> int:
        return sum(m for _a, m in self.denominator_factors)

    def map(self, fn: Callable[[Any], Any]) -> RationalSeries:
        """Apply ``fn`` to every numerator coefficient."""
        return RationalSeries(self.numerator.map(fn), self.denominator_factors)

    def coefficients(self, count: int) -> list:
        """First ``count`` power-series coefficients."""
        values = self.numerator.padded(count)[:count]
        for a, m in self.denominator_factors:
            for _ in range(m):
                for i in range(a, count):
                    values[i] = values[i] + values[i - a]
        return values

    def with_factors(self, factors: Iterable[tuple[int, int]]) -> RationalSeries:
        """Rewrite over a denominator that is a multiple of the current one."""
        target = dict(_normalize_factors(factors))
        current = dict(self.denominator_factors)
        extra = []
        for a, m in current.items():
            if target.get(a, 0) < m:
                raise NonstandardDenominator(
                    f"(1 - z^{a})^{m} does not divide the requested denominator",
                    {"factor": [a, m]},
                )
        for a, m in target.items():
            if m > current.get(a, 0):
                extra.append((a, m - current.get(a, 0)))
        numerator = self.numerator * factors_polynomial(tuple(extra)) if extra else self.numerator
        return RationalSeries(numerator, tuple(target.items()))

    def over_common_period(self, period: int, power: int) -> RationalSeries:
        """Rewrite as H(z) / (1 - z**period)**power.

        Raises:
            NonstandardDenominator: If some factor (1 - z**a) has a not dividing
                period, or the total multiplicity exceeds power
        """
        numerator = self.numerator
        used = 0
        for a, m in self.denominator_factors:
            if period % a:
                raise NonstandardDenominator(
                    f"factor 1 - z^{a} does not divide 1 - z^{period}",
                    {"a": a, "period": period},
                )
            numerator = numerator * Polynomial.geometric(a, period // a) ** m
            used += m
        if used > power:
            raise NonstandardDenominator(
                f"pole order {used} exceeds {power}", {"pole_order": used, "power": power}
            )
        if used < power:
            numerator = numerator * Polynomial.one_minus_z_power(period, power - used)
        return RationalSeries(numerator, ((period, power),))

    def __add__(self, other: RationalSeries) -> RationalSeries:
        merged = dict(self.denominator_factors)
        for a, m in other.denominator_factors:
            merged[a] = max(merged.get(a, 0), m)
        left = self.with_factors(merged.items())
        right = other.with_factors(merged.items())
        return RationalSeries(left.numerator + right.numerator, left.denominator_factors)

    def __mul__(self, other) -> RationalSeries:
        if not isinstance(other, RationalSeries):
            return RationalSeries(self.numerator * other, self.denominator_factors)
        return RationalSeries(
            self.numerator * other.numerator,
            self.denominator_factors + other.denominator_factors,
        )

    def __rmul__(self, other) -> RationalSeries:
        return RationalSeries(other * self.numerator, self.denominator_factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash(self.pole_order)


def series_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Sum over the lcm of the two denominators."""
    return a + b


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Product over the union of the two denominators."""
    return a * b


@dataclass(frozen=True)
class NotPolynomial:
    """Marker for a series whose denominator does not divide its numerator.

    Attributes:
        coefficients: Leading power-series coefficients (degree 0 .. degree_bound)
    """

    coefficients: tuple


def series_to_polynomial(
    series: RationalSeries, degree_bound: int
) -> Polynomial | NotPolynomial:
    """Exact division of the numerator by every denominator factor.

    Args:
        series: Series to test
        degree_bound: Last degree reported when the series is not polynomial

    Returns:
        The quotient polynomial, or NotPolynomial with the first
        degree_bound + 1 series coefficients
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    quotient = series.numerator
    for a, m in series.denominator_factors:
        for _ in range(m):
            quotient, exact = divide_by_one_minus_z_power(quotient, a)
            if not exact:
                return NotPolynomial(tuple(series.coefficients(degree_bound + 1)))
    return quotient


@dataclass(frozen=True)
class RationalFunction:
    """Rational function numerator / denominator over the rationals, in lowest terms.

    The denominator is normalized to constant term 1, so the power series
    expansion starts with the numerator's constant term.

    Attributes:
        numerator: Numerator polynomial
        denominator: Denominator polynomial with denominator[0] == 1
    """

    numerator: Polynomial
    denominator: Polynomial

    @classmethod
    def reduced(cls, numerator: Polynomial, denominator: Polynomial) -> RationalFunction:
        """Cancel the common factor and normalize the denominator."""
        if not denominator:
            raise ZeroDivisionError("zero denominator")
        if not numerator:
            return cls(Polynomial(), Polynomial.constant(Fraction(1)))
        common = rational_gcd(numerator, denominator)
        num = from_sympy(to_sympy(numerator).exquo(to_sympy(common)))
        den = from_sympy(to_sympy(denominator).exquo(to_sympy(common)))
        scale = Fraction(den[0])
        if not scale:
            raise ValueError("denominator vanishes at z = 0")
        return cls(num * (1 / scale), den * (1 / scale))

    @classmethod
    def from_series(cls, series: RationalSeries) -> RationalFunction:
        return cls.reduced(series.numerator, series.denominator)

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def coefficients(self, count: int) -> list[Fraction]:
        """First ``count`` power-series coefficients."""
        den = self.denominator
        values: list[Fraction] = []
        for i in range(count):
            c = Fraction(self.numerator[i])
            for j in range(1, min(i, den.degree) + 1):
                c -= den[j] * values[i - j]
            values.append(c)
        return values

    def __mul__(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return RationalFunction.reduced(
                self.numerator * other.numerator, self.denominator * other.denominator
            )
        if isinstance(other, Polynomial):
            return RationalFunction.reduced(self.numerator * other, self.denominator)
        return RationalFunction.reduced(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction.reduced(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            other = RationalFunction(other, Polynomial.constant(Fraction(1)))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash(self.numerator.degree - self.denominator.degree)


def polynomial_lcm(polys: Iterable[Polynomial]) -> Polynomial[Fraction]:
    """Least common multiple over the rationals, normalized to constant term 1."""
    result: Polynomial = Polynomial.constant(Fraction(1))
    for p in polys:
        common = rational_gcd(result, p)
        result = from_sympy((to_sympy(result) * to_sympy(p)).exquo(to_sympy(common)))
    scale = Fraction(result[0])
    return result * (1 / scale)


def lcm_of_periods(factors: Iterable[Factors]) -> int:
    """Least common multiple of every a appearing in the given factor lists."""
    period = 1
    for fs in factors:
        for a, _m in fs:
            period = lcm(period, a)
    return period


__all__ = [
    "RationalSeries",
    "NotPolynomial",
    "RationalFunction",
    "series_add",
    "series_mul",
    "series_to_polynomial",
    "factors_polynomial",
    "polynomial_lcm",
    "lcm_of_periods",
]
