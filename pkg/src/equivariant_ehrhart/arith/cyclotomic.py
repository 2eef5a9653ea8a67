"""Exact arithmetic in cyclotomic fields.

A :class:`Cyclotomic` stores ``sum(c_j * zeta_N**j)`` with rational ``c_j``
and ``zeta_N = exp(2*pi*i/N)``. Values are kept reduced modulo the N-th
cyclotomic polynomial, and a value that turns out to be rational is stored
with conductor 1, so it behaves exactly like the :class:`~fractions.Fraction`
it equals (same equality, same hash).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

from sympy import Poly, Symbol, cyclotomic_poly, mobius, totient

_z = Symbol("z")

Scalar = int | Fraction


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending by degree."""
    poly = Poly(cyclotomic_poly(n, _z), _z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _normalized_trace(n: int, j: int) -> Fraction:
    """Trace of zeta_n**j divided by the field degree (a Ramanujan sum ratio)."""
    m = n // gcd(j % n, n) if j % n else 1
    return Fraction(int(mobius(m)), int(totient(m)))


def _reduce(conductor: int, coeffs: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    """Reduce a coefficient vector modulo Phi_N; lower the conductor for rationals."""
    phi = _cyclotomic_coeffs(conductor)
    degree = len(phi) - 1
    c = list(coeffs)
    for top in range(conductor - 1, degree - 1, -1):
        lead = c[top]
        if lead:
            base = top - degree
            for i, p in enumerate(phi):
                if p:
                    c[base + i] -= lead * p
    if not any(c[1:]):
        return 1, (c[0],)
    return conductor, tuple(c)


class Cyclotomic:
    """Element of the cyclotomic field Q(zeta_N), in canonical form.

    Attributes:
        conductor: N, the order of the root of unity used as basis
        coeffs: N rational coefficients of zeta_N**0 .. zeta_N**(N-1)
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs) -> None:
        if conductor < 1:
            raise ValueError("conductor must be positive")
        values = [Fraction(0)] * conductor
        for j, c in enumerate(coeffs):
            values[j % conductor] += Fraction(c)
        self.conductor, self.coeffs = _reduce(conductor, values)
        self._hash: int | None = None

    # Constructors

    @classmethod
    def rational(cls, value: Scalar) -> Cyclotomic:
        """Embed a rational number."""
        return cls(1, [value])

    @classmethod
    def root_of_unity(cls, n: int, power: int = 1) -> Cyclotomic:
        """Return zeta_n**power."""
        coeffs = [0] * n
        coeffs[power % n] = 1
        return cls(n, coeffs)

    @classmethod
    def coerce(cls, value) -> Cyclotomic:
        """Convert ints, Fractions and Cyclotomics to a Cyclotomic."""
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, Rational):
            return cls.rational(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to Cyclotomic")

    # Queries

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        """Return the rational value; raises ValueError for irrational values."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_complex(self) -> complex:
        """Floating-point evaluation; used only by test oracles."""
        n = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(self.coeffs) if c),
            0j,
        )

    def lift(self, conductor: int) -> tuple[Fraction, ...]:
        """Unreduced coefficient vector of this value over zeta_conductor."""
        if conductor % self.conductor:
            raise ValueError(f"conductor {conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        values = [Fraction(0)] * conductor
        for j, c in enumerate(self.coeffs):
            values[j * step] = c
        return tuple(values)

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate, mapping zeta**j to zeta**(-j)."""
        n = self.conductor
        values = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            values[(-j) % n] += c
        return Cyclotomic(n, values)

    # Arithmetic

    def __add__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        n = lcm(self.conductor, other.conductor)
        return Cyclotomic(n, [a + b for a, b in zip(self.lift(n), other.lift(n))])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other) -> Cyclotomic:
        if isinstance(other, Rational):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n = lcm(self.conductor, other.conductor)
        left, right = self.lift(n), other.lift(n)
        values = [Fraction(0)] * n
        for i, a in enumerate(left):
            if a:
                for j, b in enumerate(right):
                    if b:
                        values[(i + j) % n] += a * b
        return Cyclotomic(n, values)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic) and other.is_rational():
            other = other.to_fraction()
        if not isinstance(other, Rational):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a cyclotomic number by zero")
        return Cyclotomic(self.conductor, [c / other for c in self.coeffs])

    def __pow__(self, exponent: int) -> Cyclotomic:
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return not (self - other)

    def __hash__(self) -> int:
        if self._hash is None:
            n = self.conductor
            trace = sum(
                (c * _normalized_trace(n, j) for j, c in enumerate(self.coeffs) if c),
                Fraction(0),
            )
            self._hash = hash(trace)
        return self._hash

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyclotomic({self.coeffs[0]})"
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if j == 0 else f"z{self.conductor}^{j}" if j > 1 else f"z{self.conductor}"
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            else:
                terms.append(f"{c}*{power}")
        return "Cyclotomic(" + " + ".join(terms) + ")"


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


__all__ = ["Cyclotomic", "ZERO", "ONE"]
