"""Class functions, character tables and decompositions into irreducibles."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from numbers import Rational
from typing import Callable, Iterable, Sequence

from sympy.utilities.iterables import partitions as _sympy_partitions

from equivariant_ehrhart.arith.cyclotomic import ZERO, Cyclotomic
from equivariant_ehrhart.errors import GroupMismatch, InvalidInput, NotASubgroup, OutOfRange
from equivariant_ehrhart.groups.group import (
    FiniteGroup,
    PermutationLike,
    as_permutation,
    cycle_type,
    cyclic_group,
    elementary_abelian_2_group,
    images,
    symmetric_group,
)

logger = logging.getLogger(__name__)

MAX_SYMMETRIC_DEGREE = 8


class ClassFunction:
    """A function on the conjugacy classes of a finite group.

    Values are Cyclotomic numbers indexed like ``group.conjugacy_classes``.
    Sums and products are pointwise; multiplying by a rational or a
    Cyclotomic scales every value. The integer 0 acts as the zero function,
    so ClassFunctions can be used as polynomial coefficients.

    Attributes:
        group: The group whose classes index the values
        values: One Cyclotomic per conjugacy class
    """

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Iterable) -> None:
        self.group = group
        self.values: tuple[Cyclotomic, ...] = tuple(Cyclotomic.coerce(v) for v in values)
        if len(self.values) != len(group.conjugacy_classes):
            raise InvalidInput(
                f"expected {len(group.conjugacy_classes)} class values, got {len(self.values)}"
            )

    @classmethod
    def constant(cls, group: FiniteGroup, value=1) -> ClassFunction:
        return cls(group, [value] * len(group.conjugacy_classes))

    @classmethod
    def zero(cls, group: FiniteGroup) -> ClassFunction:
        return cls.constant(group, 0)

    @classmethod
    def trivial(cls, group: FiniteGroup) -> ClassFunction:
        return cls.constant(group, 1)

    @classmethod
    def regular(cls, group: FiniteGroup) -> ClassFunction:
        return cls(group, [group.order] + [0] * (len(group.conjugacy_classes) - 1))

    @classmethod
    def permutation_character(
        cls, group: FiniteGroup, fixed_count: Callable[[object], int]
    ) -> ClassFunction:
        """Character of a permutation representation from per-element fixed-point counts."""
        return cls(group, [fixed_count(rep) for rep in group.class_representatives])

    def __call__(self, element: PermutationLike) -> Cyclotomic:
        """Value at a group element."""
        return self.values[self.group.class_index(element)]

    @property
    def degree(self) -> Cyclotomic:
        """Value at the identity."""
        return self.values[0]

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def conjugate(self) -> ClassFunction:
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def _check(self, other: ClassFunction) -> None:
        if self.group != other.group:
            raise GroupMismatch("class functions live on different groups")

    def __add__(self, other) -> ClassFunction:
        if isinstance(other, Rational) and other == 0:
            return self
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    __radd__ = __add__

    def __neg__(self) -> ClassFunction:
        return ClassFunction(self.group, [-v for v in self.values])

    def __sub__(self, other) -> ClassFunction:
        if isinstance(other, Rational) and other == 0:
            return self
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> ClassFunction:
        return (-self) + other

    def __mul__(self, other) -> ClassFunction:
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        if isinstance(other, (Rational, Cyclotomic)):
            return ClassFunction(self.group, [v * other for v in self.values])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> ClassFunction:
        return ClassFunction(self.group, [v / other for v in self.values])

    def __bool__(self) -> bool:
        return any(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational) and other == 0:
            return not self
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ClassFunction({list(self.values)!r})"


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters of a finite group.

    Attributes:
        group: The group
        irreducibles: Irreducible characters chi_1 .. chi_k
        labels: Display name of each irreducible
    """
    group: FiniteGroup
    irreducibles: tuple[ClassFunction, ...]
    labels: tuple[str, ...]

    def validate(self) -> None:
        """Check orthonormality and completeness.

        Raises:
            InvalidInput: If the rows are not an orthonormal basis of class functions
        """
        k = len(self.group.conjugacy_classes)
        if len(self.irreducibles) != k:
            raise InvalidInput(
                f"table has {len(self.irreducibles)} irreducibles for {k} classes",
                {"irreducibles": len(self.irreducibles), "classes": k},
            )
        for i, chi in enumerate(self.irreducibles):
            for j, psi in enumerate(self.irreducibles):
                expected = 1 if i == j else 0
                if inner_product(chi, psi) != expected:
                    raise InvalidInput(
                        f"characters {self.labels[i]} and {self.labels[j]} are not orthonormal",
                        {"pair": [i, j]},
                    )

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of the irreducibles in a class function.

    Attributes:
        multiplicities: <chi, chi_i> for each irreducible chi_i
        labels: Irreducible labels, aligned with multiplicities
        is_virtual: All multiplicities are rational integers
        is_effective: All multiplicities are nonnegative integers
    """
    multiplicities: tuple[Cyclotomic, ...]
    labels: tuple[str, ...]
    is_virtual: bool
    is_effective: bool

    def recombine(self, table: CharacterTable) -> ClassFunction:
        """Return sum(m_i * chi_i)."""
        total = ClassFunction.zero(table.group)
        for m, chi in zip(self.multiplicities, table.irreducibles):
            total = total + chi * m
        return total

    def as_dict(self) -> dict[str, Cyclotomic]:
        return dict(zip(self.labels, self.multiplicities))


def inner_product(phi: ClassFunction, chi: ClassFunction) -> Cyclotomic:
    """<phi, chi> = (1/|G|) * sum over g of phi(g) * conj(chi(g)).

    Raises:
        GroupMismatch: If the class functions live on different groups
    """
    if phi.group != chi.group:
        raise GroupMismatch("class functions live on different groups")
    total = ZERO
    for size, a, b in zip(phi.group.class_sizes, phi.values, chi.values):
        if a and b:
            total = total + a * b.conjugate() * size
    return total / phi.group.order


def decompose(chi: ClassFunction, table: CharacterTable) -> Decomposition:
    """Multiplicities of each irreducible of ``table`` in ``chi``.

    Raises:
        GroupMismatch: If chi and the table live on different groups
    """
    if chi.group != table.group:
        raise GroupMismatch("class function and character table live on different groups")
    multiplicities = tuple(inner_product(chi, irr) for irr in table.irreducibles)
    is_virtual = all(m.is_integer() for m in multiplicities)
    is_effective = is_virtual and all(m.to_fraction() >= 0 for m in multiplicities)
    return Decomposition(multiplicities, table.labels, is_virtual, is_effective)


def restrict(chi: ClassFunction, subgroup: FiniteGroup) -> ClassFunction:
    """Pull ``chi`` back to a subgroup along its class representatives.

    Raises:
        NotASubgroup: If some element of ``subgroup`` is not in chi's group
    """
    if not subgroup.is_subgroup_of(chi.group):
        raise NotASubgroup("restriction target is not a subgroup of the character's group")
    return ClassFunction(subgroup, [chi(rep) for rep in subgroup.class_representatives])


# Tables


def character_table_cyclic(
    n: int,
    group: FiniteGroup | None = None,
    generator: PermutationLike | None = None,
) -> CharacterTable:
    """Character table of Z/nZ with chi_j(g**a) = zeta_n**(j*a).

    Args:
        n: Group order
        group: Cyclic group to use; defaults to the rotation group on n points
        generator: The element g; defaults to the first group generator of
            order n, else the smallest element of order n
    """
    if n < 1:
        raise ValueError("n must be positive")
    group = group or cyclic_group(n)
    if group.order != n:
        raise InvalidInput(f"group has order {group.order}, expected {n}")
    g = _cyclic_generator(group, n, generator)

    power_of: dict[tuple[int, ...], int] = {}
    x = group.identity
    for a in range(n):
        power_of[images(x)] = a
        x = x * g
    exps = [power_of[images(rep)] for rep in group.class_representatives]
    irreducibles = tuple(
        ClassFunction(group, [Cyclotomic.root_of_unity(n, j * a) for a in exps])
        for j in range(n)
    )
    return CharacterTable(group, irreducibles, tuple(f"chi_{j}" for j in range(n)))


def _cyclic_generator(group: FiniteGroup, n: int, generator: PermutationLike | None):
    if generator is not None:
        g = as_permutation(generator, group.degree)
        if not group.contains(g) or g.order() != n:
            raise InvalidInput("generator does not generate the cyclic group")
        return g
    for g in list(group.generators) + list(group.elements):
        if g.order() == n:
            return g
    raise InvalidInput(f"group of order {n} is not cyclic")


def character_table_elementary2(
    k: int,
    group: FiniteGroup | None = None,
    generators: Sequence[PermutationLike] | None = None,
) -> CharacterTable:
    """Character table of (Z/2Z)^k, a product of k copies of the Z/2Z table.

    The irreducible labelled by a bit mask S takes the value
    (-1)**|S & bits(g)| where bits(g) records g in terms of the generators.
    """
    group = group or elementary_abelian_2_group(k)
    gens = [as_permutation(g, group.degree) for g in (generators or group.generators)]
    if group.order != 2 ** k or len(gens) != k:
        raise InvalidInput(f"expected (Z/2Z)^{k} with {k} generators")

    bits: dict[tuple[int, ...], int] = {images(group.identity): 0}
    frontier = [group.identity]
    while frontier:
        x = frontier.pop()
        for i, g in enumerate(gens):
            y = x * g
            if images(y) not in bits:
                bits[images(y)] = bits[images(x)] ^ (1 << i)
                frontier.append(y)
    if len(bits) != group.order:
        raise InvalidInput("generators do not generate the group")
    reps = [bits[images(rep)] for rep in group.class_representatives]
    irreducibles = tuple(
        ClassFunction(group, [(-1) ** bin(mask & b).count("1") for b in reps])
        for mask in range(2 ** k)
    )
    labels = tuple("chi_" + format(mask, f"0{k}b")[::-1] if k else "chi_" for mask in range(2 ** k))
    return CharacterTable(group, irreducibles, labels)


def partitions_descending(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in descending lexicographic order."""
    parts = [
        tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))
        for p in _sympy_partitions(n)
    ]
    return sorted(parts, reverse=True)


@lru_cache(maxsize=None)
def _mn_character(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on a beta-set: remove border strips of sizes mu."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in present:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted((present - {b}) | {target}, reverse=True))
        total += (-1) ** height * _mn_character(new_beta, rest)
    return total


def symmetric_character(shape: Sequence[int], cycle_lengths: Sequence[int]) -> int:
    """Value of the irreducible S_n character of ``shape`` on a cycle type."""
    length = len(shape)
    beta = tuple(part + length - 1 - i for i, part in enumerate(shape))
    mu = tuple(sorted(cycle_lengths, reverse=True))
    return _mn_character(beta, mu)


def character_table_symmetric(
    n: int,
    group: FiniteGroup | None = None,
    cycle_type_of: Callable[[object], Sequence[int]] | None = None,
) -> CharacterTable:
    """Character table of S_n via the Murnaghan-Nakayama rule.

    Rows are labelled by partitions in descending lexicographic order; the
    group's classes are matched to partitions through ``cycle_type_of``
    (default: cycle type of the element on the group's ground set).

    Raises:
        OutOfRange: If n is outside 1..8
        InvalidInput: If the classes cannot be matched one-to-one to cycle types
    """
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise OutOfRange(f"symmetric tables are supported for 1 <= n <= {MAX_SYMMETRIC_DEGREE}")
    group = group or symmetric_group(n)
    cycle_type_of = cycle_type_of or cycle_type
    shapes = partitions_descending(n)
    types = []
    for rep in group.class_representatives:
        ct = tuple(sorted(cycle_type_of(rep), reverse=True))
        if sum(ct) != n:
            raise InvalidInput(f"cycle type {ct} is not a partition of {n}")
        types.append(ct)
    if len(set(types)) != len(types) or len(types) != len(shapes):
        raise InvalidInput(
            "conjugacy classes do not match the cycle types of S_n one-to-one",
            {"cycle_types": [list(t) for t in types]},
        )
    irreducibles = tuple(
        ClassFunction(group, [symmetric_character(shape, ct) for ct in types])
        for shape in shapes
    )
    labels = tuple("[" + ",".join(map(str, shape)) + "]" for shape in shapes)
    return CharacterTable(group, irreducibles, labels)


def character_table_from_rows(
    group: FiniteGroup,
    representatives: Sequence[PermutationLike],
    sizes: Sequence[int],
    rows: Sequence[Sequence],
    labels: Sequence[str] | None = None,
) -> CharacterTable:
    """Validated table from explicit class representatives and value rows.

    Raises:
        InvalidInput: If a representative is not in the group, classes are
            repeated or sizes disagree, or the rows are not orthonormal
    """
    order = []
    for rep, size in zip(representatives, sizes):
        try:
            index = group.class_index(rep)
        except NotASubgroup as e:
            raise InvalidInput(f"class representative {list(rep)} is not a group element") from e
        if group.conjugacy_classes[index].size != size:
            raise InvalidInput(
                f"class of {list(rep)} has size {group.conjugacy_classes[index].size}, not {size}"
            )
        order.append(index)
    if sorted(order) != list(range(len(group.conjugacy_classes))):
        raise InvalidInput("table classes do not cover the conjugacy classes exactly once")
    irreducibles = []
    for row in rows:
        values = [ZERO] * len(order)
        for index, value in zip(order, row):
            values[index] = Cyclotomic.coerce(value)
        irreducibles.append(ClassFunction(group, values))
    labels = tuple(labels or (f"chi_{i}" for i in range(len(irreducibles))))
    table = CharacterTable(group, tuple(irreducibles), labels)
    table.validate()
    return table


def power_characters(
    group: FiniteGroup,
    rho: Sequence,
    t_max: int,
) -> tuple[list[ClassFunction], list[ClassFunction]]:
    """Characters of symmetric and exterior powers of a matrix representation.

    Args:
        group: The group
        rho: Integer matrix per conjugacy class (aligned with group.conjugacy_classes)
        t_max: Last symmetric power returned

    Returns:
        Tuple (sym, ext): sym[t] is the character of Sym^t(V) for t <= t_max,
        ext[i] the character of the i-th exterior power for i <= dim V
    """
    from equivariant_ehrhart.polytope.lattice import det_one_minus_z

    dets = [det_one_minus_z(matrix) for matrix in rho]
    dim = max((d.degree for d in dets), default=0)
    ext = [
        ClassFunction(group, [(-1) ** i * d[i] for d in dets])
        for i in range(dim + 1)
    ]
    sym_values = []
    for d in dets:
        series = [1]
        for t in range(1, t_max + 1):
            series.append(-sum(d[j] * series[t - j] for j in range(1, min(t, d.degree) + 1)))
        sym_values.append(series)
    sym = [ClassFunction(group, [s[t] for s in sym_values]) for t in range(t_max + 1)]
    return sym, ext


__all__ = [
    "ClassFunction",
    "CharacterTable",
    "Decomposition",
    "inner_product",
    "decompose",
    "restrict",
    "character_table_cyclic",
    "character_table_elementary2",
    "character_table_symmetric",
    "character_table_from_rows",
    "partitions_descending",
    "symmetric_character",
    "power_characters",
]
