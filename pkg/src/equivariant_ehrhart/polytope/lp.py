"""Exact Phase-I simplex for feasibility of A x = b, x >= 0."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

logger = logging.getLogger(__name__)

Row = list[Fraction]


def _pivot(tableau: list[Row], cost: Row, basis: list[int], row: int, col: int) -> None:
    pivot_row = tableau[row]
    factor = pivot_row[col]
    pivot_row[:] = [v / factor for v in pivot_row]
    for r, other in enumerate(tableau):
        if r != row and other[col]:
            scale = other[col]
            other[:] = [a - scale * b for a, b in zip(other, pivot_row)]
    if cost[col]:
        scale = cost[col]
        cost[:] = [a - scale * b for a, b in zip(cost, pivot_row)]
    basis[row] = col


def find_feasible_point(
    a: Sequence[Sequence], b: Sequence
) -> list[Fraction] | None:
    """Find x >= 0 with A x = b, or report infeasibility.

    Runs the Phase-I simplex method on the artificial problem
    min sum(y) s.t. A x + y = b, x, y >= 0 in exact rational arithmetic.
    Bland's rule (smallest entering index, smallest leaving basis index)
    guarantees termination.

    Args:
        a: m x n constraint matrix
        b: Right-hand side of length m

    Returns:
        A basic feasible solution x, or None when the system is infeasible
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n

    tableau: list[Row] = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        artificial = [Fraction(0)] * m
        artificial[i] = Fraction(1)
        tableau.append(row + artificial + [rhs])

    width = n + m
    # reduced costs of min sum(y) with the artificial basis priced out
    cost: Row = [Fraction(0)] * (width + 1)
    for row in tableau:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best: Fraction | None = None
        for r, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[width] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leaving]):
                    best, leaving = ratio, r
        if leaving is None:
            # Phase I is bounded below by zero
            raise ArithmeticError("unbounded Phase-I problem")
        _pivot(tableau, cost, basis, leaving, entering)
        pivots += 1

    logger.debug("Phase-I simplex finished after %d pivots (%dx%d)", pivots, m, n)
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for r, var in enumerate(basis):
        if var < n:
            x[var] = tableau[r][width]
    return x


def convex_combination(points: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Weights lambda >= 0 with sum(lambda) = 1 and sum(lambda_i p_i) = target."""
    if not points:
        return None
    dim = len(target)
    a = [[p[k] for p in points] for k in range(dim)]
    a.append([1] * len(points))
    b = list(target) + [1]
    return find_feasible_point(a, b)


def in_convex_hull(points: Sequence[Sequence], target: Sequence) -> bool:
    """True iff target is a convex combination of points."""
    return convex_combination(points, target) is not None


__all__ = ["find_feasible_point", "convex_combination", "in_convex_hull"]
