"""Integer and rational linear algebra on small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from sympy import Matrix, Rational, Symbol, ZZ
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp

from equivariant_ehrhart.arith.polynomial import Polynomial

IntMatrix = list[list[int]]

_x = Symbol("x")


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sympy_matrix(rows: Sequence[Sequence]) -> Matrix:
    return Matrix([[Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rows])


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Lattice basis of {x in Z^n : A x = 0}, returned as a list of vectors.

    Uses the Smith decomposition S A T = D: the columns of T matching zero
    diagonal entries of D span the integer kernel.
    """
    if not rows:
        n = ncols or 0
        return [[int(i == j) for j in range(n)] for i in range(n)]
    n = len(rows[0])
    m = Matrix([[int(v) for v in row] for row in rows])
    d, _s, t = smith_normal_decomp(m, domain=ZZ)
    rank = sum(1 for i in range(min(d.rows, d.cols)) if d[i, i] != 0)
    return [[int(t[i, j]) for i in range(n)] for j in range(rank, n)]


def saturation(vectors: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Basis of (span_Q(vectors)) intersected with Z^n."""
    if not vectors:
        return []
    orthogonal = integer_kernel(vectors, n)
    if not orthogonal:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return integer_kernel(orthogonal, n)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return _sympy_matrix(rows).rank()


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    if not rows:
        return [], ()
    reduced, pivots = _sympy_matrix(rows).rref()
    result = [
        [_to_fraction(reduced[i, j]) for j in range(reduced.cols)]
        for i in range(len(pivots))
    ]
    return result, tuple(pivots)


def solve_rational(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B for square invertible A."""
    solution = _sympy_matrix(a).LUsolve(_sympy_matrix(b))
    return [[_to_fraction(solution[i, j]) for j in range(solution.cols)] for i in range(solution.rows)]


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    inv = _sympy_matrix(a).inv()
    return [[_to_fraction(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), 0) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((row[k] * v[k] for k in range(len(v))), 0) for row in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def det_one_minus_z(a: Sequence[Sequence[int]]) -> Polynomial[int]:
    """det(I - z A) as an integer polynomial in z.

    If charpoly(A) = x**n + c_1 x**(n-1) + ... + c_n, then
    det(I - z A) = 1 + c_1 z + ... + c_n z**n.
    """
    if not a:
        return Polynomial.constant(1)
    coeffs = _sympy_matrix(a).charpoly(_x).all_coeffs()
    return Polynomial(int(c) for c in coeffs)


def smith_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    if not rows:
        return []
    factors = invariant_factors(Matrix([[int(v) for v in row] for row in rows]), domain=ZZ)
    return [abs(int(f)) for f in factors if f != 0]


def common_denominator(values: Sequence) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


def primitive(vector: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector with the same direction."""
    den = common_denominator(vector)
    ints = [int(Fraction(v) * den) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


__all__ = [
    "integer_kernel",
    "saturation",
    "rank",
    "rref",
    "solve_rational",
    "inverse",
    "matmul",
    "matvec",
    "transpose",
    "det_one_minus_z",
    "smith_invariants",
    "common_denominator",
    "primitive",
]
