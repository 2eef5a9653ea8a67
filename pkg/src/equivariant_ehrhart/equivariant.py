"""Equivariant Ehrhart series, H*-series and the characters chi_tP."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from equivariant_ehrhart.action import PolytopeAction
from equivariant_ehrhart.arith.polynomial import Polynomial, rational_divmod
from equivariant_ehrhart.arith.quasipolynomial import Quasipolynomial, series_to_quasipolynomial
from equivariant_ehrhart.arith.series import (
    RationalFunction,
    RationalSeries,
    polynomial_lcm,
)
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.errors import DegreeInconsistent, NotASubgroup
from equivariant_ehrhart.groups.characters import (
    CharacterTable,
    ClassFunction,
    Decomposition,
    decompose,
)
from equivariant_ehrhart.groups.group import FiniteGroup
from equivariant_ehrhart.polytope.ehrhart import ehrhart_series

logger = logging.getLogger(__name__)

Effectiveness = bool | Literal["unknown"]


def assemble(group: FiniteGroup, per_class: list[Polynomial]) -> Polynomial:
    """Polynomial with ClassFunction coefficients from one polynomial per class."""
    length = max((len(p) for p in per_class), default=0)
    return Polynomial(
        ClassFunction(group, [p[i] for p in per_class]) for i in range(length)
    )


@dataclass(frozen=True)
class EquivariantSeries:
    """Ehr(P^g; z) for one representative g of every conjugacy class.

    Attributes:
        action: The polytope action
        per_class: Ehrhart series of the fixed polytopes, aligned with the classes
    """
    action: PolytopeAction
    per_class: tuple[RationalSeries, ...]

    @property
    def group(self) -> FiniteGroup:
        return self.action.group

    @property
    def dim(self) -> int:
        return self.action.polytope.dim

    def coefficient(self, t: int) -> ClassFunction:
        """chi_tP as a class function, read off the series."""
        return ClassFunction(self.group, [s.coefficients(t + 1)[t] for s in self.per_class])


@dataclass(frozen=True)
class HTildeReport:
    """EE(P; z) written over (1 - z**N)**(d+1).

    Attributes:
        numerator: Polynomial with ClassFunction coefficients
        exponent: N, the exponent of the group
        dim: d, the dimension of the polytope
    """
    numerator: Polynomial
    exponent: int
    dim: int
    group: FiniteGroup

    def at_class(self, index: int) -> Polynomial[Fraction]:
        return self.numerator.map(lambda c: c.values[index].to_fraction())


@dataclass(frozen=True)
class HStarReport:
    """H*(P; z) = EE(P; z) * det(I - z rho), class by class.

    Attributes:
        group: The acting group
        hstar_per_class: H* at each class representative, in lowest terms
        is_polynomial: Every class reduced to a polynomial
        coefficients: ClassFunction coefficients; complete when polynomial,
            otherwise the power-series coefficients up to ``truncation``
        truncation: Last reported degree for non-polynomial H*, else None
        common_denominator: lcm of the per-class denominators (1 when polynomial)
        common_numerator: H* * common_denominator with ClassFunction coefficients
        decomposition: Decompositions of the common_numerator coefficients
        lin_comb: Per-irreducible rational functions sum_i m_ij z**i / denominator
        is_effective: True, False, or "unknown" without a character table
        labels: Irreducible labels of the table used
    """
    group: FiniteGroup
    hstar_per_class: tuple[RationalFunction, ...]
    is_polynomial: bool
    coefficients: tuple[ClassFunction, ...]
    truncation: int | None
    common_denominator: Polynomial
    common_numerator: Polynomial
    decomposition: tuple[Decomposition, ...] | None
    lin_comb: tuple[RationalFunction | None, ...] | None
    is_effective: Effectiveness
    labels: tuple[str, ...] | None = None

    @property
    def polynomial(self) -> Polynomial | None:
        """H* as a polynomial with ClassFunction coefficients, when it is one."""
        return self.common_numerator if self.is_polynomial else None

    def at_identity(self) -> RationalFunction:
        return self.hstar_per_class[0]


@dataclass(frozen=True)
class ChiReport:
    """chi_tP as a quasipolynomial in t with ClassFunction coefficients.

    Attributes:
        quasipolynomial: Constituents per residue of t mod the period
        by_irreducible: For each residue, the polynomial in t multiplying each
            irreducible (only with a character table)
        labels: Irreducible labels
    """
    quasipolynomial: Quasipolynomial
    by_irreducible: tuple[tuple[Polynomial, ...], ...] | None = None
    labels: tuple[str, ...] | None = None

    def evaluate(self, t: int) -> ClassFunction:
        return self.quasipolynomial.evaluate(t)


def equivariant_series(action: PolytopeAction) -> EquivariantSeries:
    """Ehrhart series of P^g for each conjugacy class representative g."""
    per_class = []
    for index, rep in enumerate(action.group.class_representatives):
        fixed = action.fixed_polytope(rep).polytope
        per_class.append(ehrhart_series(fixed))
        logger.debug("Class %d: fixed polytope of dimension %d", index, fixed.dim)
    return EquivariantSeries(action, tuple(per_class))


def h_tilde(series: EquivariantSeries) -> HTildeReport:
    """Rewrite every class over the common denominator (1 - z**N)**(d+1).

    Raises:
        DegreeInconsistent: If a numerator reaches degree N * (d+1)
    """
    n_exp = series.group.exponent
    d = series.dim
    numerators = [s.over_common_period(n_exp, d + 1).numerator for s in series.per_class]
    for p in numerators:
        if p.degree > n_exp * (d + 1) - 1:
            raise DegreeInconsistent(
                f"numerator degree {p.degree} exceeds N(d+1) - 1 = {n_exp * (d + 1) - 1}",
                {"degree": p.degree, "exponent": n_exp, "dim": d},
            )
    return HTildeReport(assemble(series.group, numerators), n_exp, d, series.group)


def _rational_multiplicities(decomposition: Decomposition) -> list[Fraction] | None:
    if not all(m.is_rational() for m in decomposition.multiplicities):
        return None
    return [m.to_fraction() for m in decomposition.multiplicities]


def hstar(
    series: EquivariantSeries,
    table: CharacterTable | None = None,
    truncation: int | None = None,
    config: ComputeConfig | None = None,
) -> HStarReport:
    """H*(P; z) per class, with polynomiality and effectiveness verdicts.

    Polynomiality is decided by exact reduction of det(I - z rho(g)) * Ehr(P^g; z)
    for every class g. Without a table, effectiveness of a polynomial H* is
    reported as "unknown"; a non-polynomial H* is never effective.
    """
    config = config or ComputeConfig()
    group = series.group
    action = series.action
    per_class = []
    for rep, s in zip(group.class_representatives, series.per_class):
        det = action.det_factor(rep)
        per_class.append(RationalFunction.reduced(s.numerator * det, s.denominator))
    is_polynomial = all(rf.is_polynomial for rf in per_class)

    common_denominator = polynomial_lcm(rf.denominator for rf in per_class)
    numerators = []
    for rf in per_class:
        factor, _rest = rational_divmod(common_denominator, rf.denominator)
        numerators.append(rf.numerator * factor)
    common_numerator = assemble(group, numerators)

    if is_polynomial:
        coefficients = tuple(common_numerator.coeffs)
        trunc = None
    else:
        trunc = truncation if truncation is not None else config.truncation_for(
            group.exponent, series.dim
        )
        values = [rf.coefficients(trunc + 1) for rf in per_class]
        coefficients = tuple(
            ClassFunction(group, [v[i] for v in values]) for i in range(trunc + 1)
        )
        logger.info(
            "H* is not polynomial; residual denominator %s", list(common_denominator.coeffs)
        )

    decomposition = None
    lin_comb = None
    is_effective: Effectiveness = False if not is_polynomial else "unknown"
    labels = None
    if table is not None:
        labels = table.labels
        decomposition = tuple(decompose(c, table) for c in common_numerator.coeffs)
        if is_polynomial:
            is_effective = all(dec.is_effective for dec in decomposition)
        lin_comb = _lin_comb(decomposition, common_denominator, len(table.irreducibles))
    return HStarReport(
        group=group,
        hstar_per_class=tuple(per_class),
        is_polynomial=is_polynomial,
        coefficients=coefficients,
        truncation=trunc,
        common_denominator=common_denominator,
        common_numerator=common_numerator,
        decomposition=decomposition,
        lin_comb=lin_comb,
        is_effective=is_effective,
        labels=labels,
    )


def _lin_comb(
    decomposition: tuple[Decomposition, ...], denominator: Polynomial, count: int
) -> tuple[RationalFunction | None, ...]:
    rows = [_rational_multiplicities(dec) for dec in decomposition]
    result = []
    for j in range(count):
        if any(row is None for row in rows):
            result.append(None)
            continue
        numerator = Polynomial(row[j] for row in rows)
        result.append(RationalFunction.reduced(numerator, denominator))
    return tuple(result)


def chi_tP(report: HTildeReport, table: CharacterTable | None = None) -> ChiReport:
    """chi_tP as a quasipolynomial of period dividing N.

    With a table, each constituent is also written as sum_j f_j(t) chi_j.
    """
    n_exp, d = report.exponent, report.dim
    group = report.group
    per_class = [
        series_to_quasipolynomial(RationalSeries.over(report.at_class(i), n_exp, d + 1), n_exp)
        for i in range(len(group.conjugacy_classes))
    ]
    constituents = tuple(
        assemble(group, [qp.constituents[r] for qp in per_class]) for r in range(n_exp)
    )
    quasi = Quasipolynomial(n_exp, constituents).normalized()
    if table is None:
        return ChiReport(quasi)

    by_irreducible = []
    for constituent in quasi.constituents:
        decs = [decompose(c, table) for c in constituent.coeffs]
        by_irreducible.append(tuple(
            Polynomial(dec.multiplicities[j] for dec in decs)
            for j in range(len(table.irreducibles))
        ))
    return ChiReport(quasi, tuple(by_irreducible), table.labels)


def restrict_hstar(
    series: EquivariantSeries,
    subgroup: FiniteGroup,
    sub_table: CharacterTable | None = None,
    truncation: int | None = None,
    config: ComputeConfig | None = None,
) -> HStarReport:
    """H* of the action restricted to a subgroup.

    Per-class series are pulled back along the subgroup's class
    representatives and reduced against the subgroup's own det factors.

    Raises:
        NotASubgroup: If subgroup is not contained in the acting group
    """
    parent = series.group
    if not subgroup.is_subgroup_of(parent):
        raise NotASubgroup("restriction target is not a subgroup of the acting group")
    restricted_action = series.action.restrict(subgroup)
    per_class = tuple(
        series.per_class[parent.class_index(rep)] for rep in subgroup.class_representatives
    )
    restricted = EquivariantSeries(restricted_action, per_class)
    return hstar(restricted, sub_table, truncation=truncation, config=config)


__all__ = [
    "EquivariantSeries",
    "HTildeReport",
    "HStarReport",
    "ChiReport",
    "equivariant_series",
    "h_tilde",
    "hstar",
    "chi_tP",
    "restrict_hstar",
    "assemble",
]
