"""Finite permutation groups with explicit elements and conjugacy classes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from equivariant_ehrhart.config import DEFAULT_ORDER_CAP
from equivariant_ehrhart.errors import InvalidInput, NotASubgroup, OrderCapExceeded

logger = logging.getLogger(__name__)

PermutationLike = Permutation | Sequence[int]


def as_permutation(perm: PermutationLike, degree: int | None = None) -> Permutation:
    """Convert an image array (0-based) or a sympy Permutation to a Permutation."""
    if isinstance(perm, Permutation):
        p = perm
    else:
        images = [int(i) for i in perm]
        if sorted(images) != list(range(len(images))):
            raise InvalidInput(f"{images} is not a permutation of 0..{len(images) - 1}")
        p = Permutation(images)
    if degree is not None and p.size != degree:
        if p.size > degree:
            raise InvalidInput(f"permutation acts on {p.size} points, expected {degree}")
        p = Permutation(list(p.array_form) + list(range(p.size, degree)))
    return p


def images(perm: Permutation) -> tuple[int, ...]:
    """Image array of a permutation, used as a hashable key."""
    return tuple(perm.array_form)


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class of a finite group.

    Attributes:
        representative: Element with the lexicographically smallest image array
        size: Number of elements in the class
        members: Image arrays of all elements of the class
    """
    representative: Permutation
    size: int
    members: frozenset[tuple[int, ...]] = field(repr=False)


class FiniteGroup:
    """A finite group of permutations of {0, ..., degree - 1}.

    Elements are enumerated once and sorted by image array; conjugacy classes
    are sorted by element order and then by representative, so the identity
    class always comes first.

    Attributes:
        degree: Size of the ground set
        generators: Generating permutations
        elements: All elements, sorted by image array
        conjugacy_classes: Classes of conjugate elements
        exponent: lcm of the element orders
    """

    def __init__(self, generators: Iterable[Permutation], degree: int, elements, classes) -> None:
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.conjugacy_classes: tuple[ConjugacyClass, ...] = tuple(classes)
        self.exponent = lcm(*(p.order() for p in self.elements)) if self.elements else 1
        self._class_of = {
            member: index
            for index, cls in enumerate(self.conjugacy_classes)
            for member in cls.members
        }
        self._key = frozenset(self._class_of)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @property
    def class_representatives(self) -> list[Permutation]:
        return [cls.representative for cls in self.conjugacy_classes]

    @property
    def class_sizes(self) -> list[int]:
        return [cls.size for cls in self.conjugacy_classes]

    def contains(self, perm: PermutationLike) -> bool:
        return images(as_permutation(perm, self.degree)) in self._class_of

    def class_index(self, perm: PermutationLike) -> int:
        """Index of the conjugacy class containing ``perm``."""
        key = images(as_permutation(perm, self.degree))
        try:
            return self._class_of[key]
        except KeyError:
            raise NotASubgroup(f"{list(key)} is not an element of the group") from None

    def is_abelian(self) -> bool:
        return len(self.conjugacy_classes) == self.order

    def subgroup(self, generators: Iterable[PermutationLike]) -> FiniteGroup:
        """Subgroup generated by elements of this group.

        Raises:
            NotASubgroup: If some generator is not an element of this group
        """
        perms = [as_permutation(g, self.degree) for g in generators]
        for p in perms:
            if not self.contains(p):
                raise NotASubgroup(
                    f"generator {p.array_form} is not an element of the group",
                    {"generator": list(p.array_form)},
                )
        return close_group(perms, degree=self.degree, order_cap=self.order)

    def is_subgroup_of(self, other: FiniteGroup) -> bool:
        return self.degree == other.degree and self._key <= other._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.degree, self._key))

    def __repr__(self) -> str:
        return (
            f"FiniteGroup(degree={self.degree}, order={self.order}, "
            f"classes={len(self.conjugacy_classes)})"
        )


def _class_of(element: Permutation, generators: Sequence[Permutation]) -> set[tuple[int, ...]]:
    """Orbit of ``element`` under conjugation by the generators."""
    seen = {images(element)}
    frontier = [element]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = x ^ g
            key = images(y)
            if key not in seen:
                seen.add(key)
                frontier.append(y)
    return seen


def close_group(
    generators: Iterable[PermutationLike],
    degree: int | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Enumerate the group generated by permutations.

    Args:
        generators: Image arrays or sympy Permutations, all of one degree
        degree: Ground-set size; required when there are no generators
        order_cap: Largest accepted group order

    Returns:
        FiniteGroup with all elements and conjugacy classes

    Raises:
        OrderCapExceeded: If the generated group is larger than order_cap
        InvalidInput: If the generators act on different ground sets
    """
    perms = [as_permutation(g) for g in generators]
    if degree is None:
        degree = perms[0].size if perms else 1
    perms = [as_permutation(p, degree) for p in perms]

    identity = Permutation(list(range(degree)))
    group = PermutationGroup(perms or [identity])
    order = int(group.order())
    if order > order_cap:
        raise OrderCapExceeded(
            f"group order {order} exceeds the cap {order_cap}",
            {"order": order, "order_cap": order_cap},
        )

    elements = sorted(group.generate(af=False), key=images)
    conj_generators = perms or [identity]
    remaining = {images(e): e for e in elements}
    classes = []
    for element in elements:
        key = images(element)
        if key not in remaining:
            continue
        members = _class_of(element, conj_generators)
        for m in members:
            remaining.pop(m, None)
        rep = min(members)
        classes.append(ConjugacyClass(Permutation(list(rep)), len(members), frozenset(members)))
    classes.sort(key=lambda c: (c.representative.order(), images(c.representative)))

    logger.debug("Closed group of order %d with %d classes", order, len(classes))
    return FiniteGroup(perms, degree, elements, classes)


def cycle_type(perm: Permutation) -> tuple[int, ...]:
    """Cycle lengths of a permutation (fixed points included), descending."""
    return tuple(sorted((len(c) for c in perm.full_cyclic_form), reverse=True))


def cyclic_group(n: int) -> FiniteGroup:
    """Z/nZ acting on n points by the rotation i -> i + 1."""
    return close_group([[(i + 1) % n for i in range(n)]], degree=n)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n acting on n points."""
    if n == 1:
        return close_group([], degree=1)
    gens = [[1, 0] + list(range(2, n)), [(i + 1) % n for i in range(n)]]
    return close_group(gens, degree=n)


def elementary_abelian_2_group(k: int) -> FiniteGroup:
    """(Z/2Z)^k acting on 2k points by independent transpositions."""
    gens = []
    for i in range(k):
        img = list(range(2 * k))
        img[2 * i], img[2 * i + 1] = 2 * i + 1, 2 * i
        gens.append(img)
    return close_group(gens, degree=max(2 * k, 1))


__all__ = [
    "FiniteGroup",
    "ConjugacyClass",
    "close_group",
    "as_permutation",
    "images",
    "cycle_type",
    "cyclic_group",
    "symmetric_group",
    "elementary_abelian_2_group",
]
