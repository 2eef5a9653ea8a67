"""Dense univariate polynomials over exact coefficient rings.

:class:`Polynomial` is generic over its coefficient ring: ``int``,
``Fraction``, :class:`~equivariant_ehrhart.arith.cyclotomic.Cyclotomic` and
:class:`~equivariant_ehrhart.groups.characters.ClassFunction` all work, as
long as they support ``+``, ``-``, ``*`` and truthiness for zero testing.
Division, gcd and lowest-terms reduction are only defined over the rationals
and are delegated to :mod:`sympy`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Generic, Iterable, TypeVar

from sympy import QQ, Poly, Rational, Symbol

R = TypeVar("R")
S = TypeVar("S")

_z = Symbol("z")


def _trim(coeffs: Iterable[R]) -> tuple[R, ...]:
    values = list(coeffs)
    while values and not values[-1]:
        values.pop()
    return tuple(values)


@dataclass(frozen=True, init=False)
class Polynomial(Generic[R]):
    """Polynomial with coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple, so the leading
    coefficient of a nonzero polynomial is always nonzero.

    Attributes:
        coeffs: Coefficients, index = degree
    """

    coeffs: tuple[R, ...]

    def __init__(self, coeffs: Iterable[R] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # Constructors

    @classmethod
    def constant(cls, value: R) -> Polynomial[R]:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Any = 1) -> Polynomial:
        return cls([0] * degree + [value])

    @classmethod
    def one_minus_z_power(cls, a: int, m: int = 1) -> Polynomial[int]:
        """Return (1 - z**a)**m with integer coefficients."""
        coeffs = [0] * (a * m + 1)
        for i in range(m + 1):
            coeffs[a * i] = (-1) ** i * comb(m, i)
        return cls(coeffs)

    @classmethod
    def geometric(cls, step: int, count: int) -> Polynomial[int]:
        """Return 1 + z**step + ... + z**(step*(count-1))."""
        coeffs = [0] * (step * (count - 1) + 1) if count else []
        for i in range(count):
            coeffs[step * i] = 1
        return cls(coeffs)

    # Queries

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, degree: int) -> R | int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def padded(self, length: int, zero: Any = 0) -> list:
        """Coefficient list extended with ``zero`` to at least ``length`` entries."""
        values = list(self.coeffs)
        values.extend([zero] * (length - len(values)))
        return values

    def evaluate(self, point: Any) -> Any:
        """Horner evaluation; the point may come from any compatible ring."""
        result: Any = 0
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def map(self, fn: Callable[[R], S]) -> Polynomial[S]:
        """Apply ``fn`` to every coefficient."""
        return Polynomial(fn(c) for c in self.coeffs)

    def substitute_power(self, k: int) -> Polynomial[R]:
        """Return p(z**k)."""
        if not self.coeffs:
            return self
        values: list = [0] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            values[k * i] = c
        return Polynomial(values)

    def truncate(self, length: int) -> Polynomial[R]:
        """Keep the coefficients of degree < length."""
        return Polynomial(self.coeffs[:length])

    # Arithmetic

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.constant(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        values: list = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                term = a * b
                values[i + j] = term if values[i + j] is None else values[i + j] + term
        return Polynomial(0 if v is None else v for v in values)

    def __rmul__(self, other) -> Polynomial:
        return Polynomial(other * c for c in self.coeffs)

    def __pow__(self, exponent: int) -> Polynomial:
        result: Polynomial = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> Polynomial[R]:
        """Multiply by z**k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if not self.coeffs:
            return not other
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def divide_by_one_minus_z_power(p: Polynomial, a: int) -> tuple[Polynomial, bool]:
    """Divide ``p`` by (1 - z**a) over any coefficient ring.

    Returns:
        Tuple of (quotient, exact); exact is False when the remainder is nonzero
    """
    if not p:
        return p, True
    if p.degree < a:
        return Polynomial(), False
    quotient: list = []
    for i in range(p.degree - a + 1):
        c = p[i]
        if i >= a:
            c = c + quotient[i - a]
        quotient.append(c)
    q = Polynomial(quotient)
    return q, q * Polynomial.one_minus_z_power(a) == p


# Rational polynomials


def to_sympy(p: Polynomial) -> Poly:
    """Convert a rational polynomial to a sympy ``Poly`` over QQ."""
    coeffs = [Rational(c.numerator, c.denominator) for c in (Fraction(x) for x in reversed(p.coeffs))]
    return Poly(coeffs or [0], _z, domain=QQ)


def from_sympy(poly: Poly) -> Polynomial[Fraction]:
    """Convert a sympy ``Poly`` with rational coefficients back to a Polynomial."""
    return Polynomial(
        Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())
    )


def rational_divmod(p: Polynomial, q: Polynomial) -> tuple[Polynomial[Fraction], Polynomial[Fraction]]:
    """Quotient and remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quotient, remainder = to_sympy(p).div(to_sympy(q))
    return from_sympy(quotient), from_sympy(remainder)


def rational_gcd(p: Polynomial, q: Polynomial) -> Polynomial[Fraction]:
    """Monic gcd over the rationals."""
    return from_sympy(to_sympy(p).gcd(to_sympy(q)))


__all__ = [
    "Polynomial",
    "divide_by_one_minus_z_power",
    "to_sympy",
    "from_sympy",
    "rational_divmod",
    "rational_gcd",
]
