"""Eulerian polynomials and generalized binomial coefficients."""

from functools import lru_cache
from math import comb

from equivariant_ehrhart.arith.polynomial import Polynomial


@lru_cache(maxsize=None)
def eulerian_polynomial(n: int) -> Polynomial[int]:
    """A_n(z), defined by sum_{t>=0} t**n z**t = A_n(z) / (1 - z)**(n+1).

    A_0 = 1; for n >= 1 the constant term vanishes and the coefficient of
    z**(k+1) is the number of permutations of n letters with k ascents.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [
        sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))
        for k in range(n + 1)
    ]
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def generalized_binomial(n: int, k: int, p: int) -> int:
    """Coefficient of x**k in (1 + x + ... + x**(p-1))**n.

    Args:
        n: Exponent (n >= 0)
        k: Degree of the extracted coefficient
        p: Number of terms of the base polynomial (p >= 1)
    """
    if p < 1:
        raise ValueError("p must be positive")
    return int(_base_power(n, p)[k]) if k >= 0 else 0


@lru_cache(maxsize=None)
def _base_power(n: int, p: int) -> Polynomial[int]:
    return Polynomial.geometric(1, p) ** n


__all__ = ["eulerian_polynomial", "generalized_binomial"]
