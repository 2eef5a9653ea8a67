"""Hypersimplices under cyclic rotation of coordinates.

The H*-series of the hypersimplex Delta(k, n) under Z/nZ splits by winding
number d: H*_d is the permutation character of Z/nZ on the hypersimplicial
decorated ordered set partitions of type (k, n) with winding number d. This
module enumerates those partitions, evaluates the closed formula for
H*(sigma) through generalized binomial coefficients, and counts the sigma-fixed
vectors behind the inclusion-exclusion that connects the two.

Elements of Z/nZ are identified with shifts s, acting by i -> i + s on
coordinates (0-based) and on the labels 1..n of the partitions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, gcd
from typing import Iterator, Sequence

from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_partitions

from equivariant_ehrhart.action import PolytopeAction, bind
from equivariant_ehrhart.arith.eulerian import generalized_binomial
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.errors import InvalidInput, TNotFixed, TooLarge, TSizeNotMultiple
from equivariant_ehrhart.groups.characters import ClassFunction
from equivariant_ehrhart.groups.group import FiniteGroup, cyclic_group
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.utils import group_by

logger = logging.getLogger(__name__)

MAX_DOSP_N = 8


def _check_type(k: int, n: int) -> None:
    if not 0 < k < n:
        raise InvalidInput(f"hypersimplex type needs 0 < k < n, got k={k}, n={n}")


def hypersimplex(k: int, n: int) -> LatticePolytope:
    """Delta(k, n): the 0/1 vectors of length n with exactly k ones, as vertices."""
    _check_type(k, n)
    vertices = []
    for ones in combinations(range(n), k):
        vertex = [0] * n
        for i in ones:
            vertex[i] = 1
        vertices.append(tuple(vertex))
    return LatticePolytope(vertices)


def rotation_matrix(n: int, shift: int = 1) -> list[list[int]]:
    """Permutation matrix sending e_j to e_{j + shift}."""
    matrix = [[0] * n for _ in range(n)]
    for j in range(n):
        matrix[(j + shift) % n][j] = 1
    return matrix


def hypersimplex_action(k: int, n: int) -> PolytopeAction:
    """Z/nZ acting on Delta(k, n) by rotating coordinates."""
    return bind(hypersimplex(k, n), matrices=[rotation_matrix(n)])


def shift_of(perm: Permutation) -> int:
    """The shift s of a rotation i -> i + s."""
    return perm(0)


@dataclass(frozen=True)
class CyclicElementData:
    """Numerical data of a shift s in Z/nZ against the hypersimplex Delta(k, n).

    Attributes:
        b: Order of the shift
        a: n / b, the number of orbits on coordinates
        h: gcd(b, k)
        b1: b / h
        k1: k / h
    """
    b: int
    a: int
    h: int
    b1: int
    k1: int

    @classmethod
    def of(cls, k: int, n: int, shift: int) -> CyclicElementData:
        b = n // gcd(n, shift % n)
        h = gcd(b, k)
        return cls(b=b, a=n // b, h=h, b1=b // h, k1=k // h)


# Decorated ordered set partitions


@dataclass(frozen=True, order=True)
class DecoratedOSP:
    """An ordered set partition of {1..n} with positive decorations summing to k.

    Blocks sit on a circle of circumference k, l_i being the clockwise
    distance from block i to block i+1. Partitions are considered up to
    joint rotation of blocks and decorations; instances built through
    :meth:`of` are in canonical form, the rotation whose first block
    contains 1 (the lexicographically smallest rotation).

    Attributes:
        blocks: Blocks, each sorted ascending
        decorations: l_1 .. l_m
    """
    blocks: tuple[tuple[int, ...], ...]
    decorations: tuple[int, ...]

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]], decorations: Sequence[int]) -> DecoratedOSP:
        """Validate and canonicalize.

        Raises:
            InvalidInput: If the blocks do not partition 1..n or a decoration is not positive
        """
        normalized = [tuple(sorted(int(x) for x in block)) for block in blocks]
        labels = sorted(x for block in normalized for x in block)
        if not normalized or labels != list(range(1, len(labels) + 1)) or not all(normalized):
            raise InvalidInput("blocks must partition 1..n into nonempty sets")
        if len(decorations) != len(normalized) or any(int(l) < 1 for l in decorations):
            raise InvalidInput("need one positive decoration per block")
        start = next(i for i, block in enumerate(normalized) if 1 in block)
        rotated = normalized[start:] + normalized[:start]
        decs = [int(l) for l in decorations]
        return cls(tuple(rotated), tuple(decs[start:] + decs[:start]))

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def k(self) -> int:
        return sum(self.decorations)

    @property
    def is_hypersimplicial(self) -> bool:
        """1 <= l_i <= |L_i| - 1 for every block."""
        return all(1 <= l <= len(block) - 1 for block, l in zip(self.blocks, self.decorations))

    @property
    def winding_vector(self) -> tuple[int, ...]:
        """w_i, the clockwise distance from the block of i to the block of i+1 (mod n)."""
        k, n = self.k, self.n
        position = {}
        offset = 0
        for block, l in zip(self.blocks, self.decorations):
            for x in block:
                position[x] = offset
            offset += l
        return tuple(
            (position[i % n + 1] - position[i]) % k for i in range(1, n + 1)
        )

    @property
    def winding_number(self) -> int:
        return sum(self.winding_vector) // self.k

    def shifted(self, shift: int) -> DecoratedOSP:
        n = self.n
        return DecoratedOSP.of(
            [[(x - 1 + shift) % n + 1 for x in block] for block in self.blocks],
            self.decorations,
        )

    def is_fixed_by(self, shift: int) -> bool:
        return self.shifted(shift) == self

    def __str__(self) -> str:
        parts = ["{" + ",".join(map(str, block)) + "}_" + str(l)
                 for block, l in zip(self.blocks, self.decorations)]
        return "(" + ",".join(parts) + ")"


def cyclic_act(dosp: DecoratedOSP, shift: int) -> DecoratedOSP:
    """Image under i -> i + shift, in canonical form."""
    return dosp.shifted(shift)


def _compositions(k: int, m: int) -> Iterator[tuple[int, ...]]:
    for cuts in combinations(range(1, k), m - 1):
        bounds = (0,) + cuts + (k,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(m))


def enumerate_dosps(k: int, n: int, hypersimplicial_only: bool = True) -> list[DecoratedOSP]:
    """All decorated ordered set partitions of type (k, n) up to rotation.

    Each rotation class is produced once, with the block containing 1 first.

    Raises:
        TooLarge: If n exceeds 8
    """
    _check_type(k, n)
    if n > MAX_DOSP_N:
        raise TooLarge(
            f"n={n} exceeds the enumeration limit {MAX_DOSP_N}", {"n": n, "limit": MAX_DOSP_N}
        )
    found = []
    for m in range(1, min(n, k) + 1):
        for partition in multiset_partitions(list(range(1, n + 1)), m):
            blocks = [tuple(sorted(block)) for block in partition]
            first = next(block for block in blocks if 1 in block)
            rest = [block for block in blocks if block != first]
            for order in permutations(rest):
                ordered = (first,) + order
                for decorations in _compositions(k, m):
                    dosp = DecoratedOSP(ordered, decorations)
                    if hypersimplicial_only and not dosp.is_hypersimplicial:
                        continue
                    found.append(dosp)
    found.sort(key=lambda d: (d.winding_number, d))
    logger.debug("Type (%d, %d): %d decorated ordered set partitions", k, n, len(found))
    return found


def hstar_character_dosp(
    k: int, n: int, group: FiniteGroup | None = None
) -> list[ClassFunction]:
    """H*_d as permutation characters on hypersimplicial partitions of winding number d.

    Args:
        k, n: Hypersimplex type
        group: Z/nZ as a permutation group on 0..n-1; classes are read as
            shifts through their image of 0. Defaults to the rotation group.

    Returns:
        One ClassFunction per winding number d = 0 .. n-1
    """
    group = group or cyclic_group(n)
    by_winding = group_by(enumerate_dosps(k, n, hypersimplicial_only=True), lambda x: x.winding_number)
    characters = []
    for d in range(n):
        members = by_winding.get(d, [])
        characters.append(ClassFunction.permutation_character(
            group, lambda rep, members=members: sum(
                1 for x in members if x.is_fixed_by(shift_of(rep))
            ),
        ))
    return characters


def hstar_character_formula(k: int, n: int, shift: int) -> Polynomial[int]:
    """H*(Delta(k, n); z)(sigma) by inclusion-exclusion over generalized binomials.

    sum_i (-1)^i binom(a, i) sum_l binom(a, l(k1 - b1 i) - i)_{k - b i} z^(b1 l)
    """
    _check_type(k, n)
    data = CyclicElementData.of(k, n, shift)
    a, b, b1, k1 = data.a, data.b, data.b1, data.k1
    coeffs: dict[int, int] = {}
    i = 0
    while i <= a and k - b * i >= 1:
        p = k - b * i
        step = k1 - b1 * i
        ell = 0
        while ell * step - i <= a * (p - 1):
            value = generalized_binomial(a, ell * step - i, p)
            if value:
                coeffs[b1 * ell] = coeffs.get(b1 * ell, 0) + (-1) ** i * comb(a, i) * value
            ell += 1
        i += 1
    degree = max(coeffs, default=0)
    return Polynomial(coeffs.get(e, 0) for e in range(degree + 1))


def count_fixed_vectors(k: int, n: int, shift: int, subset: Sequence[int], d: int) -> int:
    """sigma-fixed integer vectors v with bounds depending on T and sum (k - b i) d.

    0 <= v_j <= k - b i - 1 off T, 1 <= v_j <= k - b i on T, where |T| = b i.
    Labels in T are 1-based.

    Raises:
        TSizeNotMultiple: If |T| is not a multiple of the order b of the shift
        TNotFixed: If T is not a union of orbits of the shift
    """
    data = CyclicElementData.of(k, n, shift)
    members = {int(x) for x in subset}
    if len(members) % data.b:
        raise TSizeNotMultiple(
            f"|T| = {len(members)} is not a multiple of b = {data.b}",
            {"size": len(members), "b": data.b},
        )
    if {(x - 1 + shift) % n + 1 for x in members} != members:
        raise TNotFixed(f"T = {sorted(members)} is not fixed by the shift {shift}",
                        {"T": sorted(members), "shift": shift})
    i = len(members) // data.b
    p = k - data.b * i
    if p < 1:
        return 0
    # a sigma-fixed vector is constant on residues mod a
    ranges = [
        range(1, p + 1) if (r + 1) in members else range(0, p)
        for r in range(data.a)
    ]
    target = p * d
    return sum(1 for v in product(*ranges) if data.b * sum(v) == target)


def fixed_vector_count_formula(k: int, n: int, shift: int, i: int, d: int) -> int:
    """binom(a, (d/b1)(k1 - b1 i) - i)_{k - b i} when b1 divides d, else 0."""
    data = CyclicElementData.of(k, n, shift)
    p = k - data.b * i
    if p < 1 or d % data.b1:
        return 0
    return generalized_binomial(data.a, (d // data.b1) * (data.k1 - data.b1 * i) - i, p)


def binomial_convolution_check(a: int, h: int, i: int, p: int, degree_bound: int) -> bool:
    """(sum binom(a,l)_h z^l)(sum binom(a, lp - i)_p z^l) == sum binom(a, lp - i)_{hp} z^l."""
    left = Polynomial(generalized_binomial(a, l, h) for l in range(degree_bound + 1))
    right = Polynomial(generalized_binomial(a, l * p - i, p) for l in range(degree_bound + 1))
    expected = Polynomial(
        generalized_binomial(a, l * p - i, h * p) for l in range(degree_bound + 1)
    )
    return (left * right).truncate(degree_bound + 1) == expected


__all__ = [
    "DecoratedOSP",
    "CyclicElementData",
    "hypersimplex",
    "hypersimplex_action",
    "rotation_matrix",
    "shift_of",
    "cyclic_act",
    "enumerate_dosps",
    "hstar_character_dosp",
    "hstar_character_formula",
    "count_fixed_vectors",
    "fixed_vector_count_formula",
    "binomial_convolution_check",
    "generalized_binomial",
]
