"""Report formatters: computation results to JSON-ready documents."""

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.certificates import HypersurfaceVerdict
from equivariant_ehrhart.equivariant import ChiReport, HStarReport, HTildeReport
from equivariant_ehrhart.groups.characters import CharacterTable, ClassFunction
from equivariant_ehrhart.halfopen import OrbitSeriesResult, PermrepResult, ValidationReport
from equivariant_ehrhart.hypersimplex import DecoratedOSP
from equivariant_ehrhart.models import PipelineResult, Statistics
from equivariant_ehrhart.output.serialization import (
    encode_class_function,
    encode_decomposition,
    encode_group,
    encode_polynomial,
    encode_quasipolynomial,
    encode_rational_function,
    encode_scalar,
    encode_series,
    encode_table,
)
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.special import PrimePermutahedronReport
from equivariant_ehrhart.utils import rational_string
from equivariant_ehrhart.zonotope import Graph, PathEffectiveness, PolynomialityVerdict


def _points(points) -> list[list[str]]:
    return [[rational_string(c) for c in p] for p in points]


def to_statistics(statistics: Statistics) -> dict:
    """Run statistics without the wall-clock time, which is not reproducible."""
    return {
        "total_classes": statistics.total_classes,
        "computed": statistics.computed,
        "cache_hits": statistics.cache_hits,
    }


def to_ehrhart(polytope: LatticePolytope, series: RationalSeries, quasi, polynomial: Polynomial | None) -> dict:
    document = {
        "vertices": _points(polytope.vertices),
        "dim": polytope.dim,
        "denominator": polytope.denominator,
        "ehrhart_series": encode_series(series),
        "quasipolynomial": encode_quasipolynomial(quasi),
    }
    if polynomial is not None:
        document["hstar"] = encode_polynomial(series.numerator)
        document["ehrhart_polynomial"] = encode_polynomial(polynomial)
    return document


def to_fixed_polytopes(result: PipelineResult) -> dict:
    return {
        "group": encode_group(result.series.group),
        "classes": [
            {
                "representative": list(c.representative),
                "fixed_vertices": _points(c.fixed_vertices),
                "fixed_dim": c.fixed_dim,
                "ehrhart_series": encode_series(c.series),
            }
            for c in result.classes
        ],
        "statistics": to_statistics(result.statistics),
    }


def _class_function_poly(poly: Polynomial) -> list:
    return [encode_class_function(c) for c in poly.coeffs]


def to_chi(report: ChiReport) -> dict:
    document = {
        "period": report.quasipolynomial.period,
        "constituents": [_class_function_poly(c) for c in report.quasipolynomial.constituents],
    }
    if report.by_irreducible is not None:
        document["by_irreducible"] = {
            label: [encode_polynomial(per_residue[j]) for per_residue in report.by_irreducible]
            for j, label in enumerate(report.labels)
        }
    return document


def to_ee_series(report: HTildeReport, chi: ChiReport) -> dict:
    return {
        "group": encode_group(report.group),
        "exponent": report.exponent,
        "dim": report.dim,
        "numerator": _class_function_poly(report.numerator),
        "chi_tP": to_chi(chi),
    }


def to_hstar(report: HStarReport, table: CharacterTable | None = None) -> dict:
    """H* report with the dictionary keys of the reference output."""
    document: dict = {
        "is_polynomial": report.is_polynomial,
        "is_effective": report.is_effective,
        "conjugacy_class_reps": encode_group(report.group)["conjugacy_class_reps"],
        "class_sizes": report.group.class_sizes,
    }
    if report.is_polynomial:
        document["Hstar"] = [
            {"class_function": encode_class_function(c)} for c in report.coefficients
        ]
    else:
        document["Hstar"] = {
            "per_class_rational": [encode_rational_function(rf) for rf in report.hstar_per_class],
            "coefficients": [encode_class_function(c) for c in report.coefficients],
            "truncation": report.truncation,
            "common_denominator": encode_polynomial(report.common_denominator),
            "common_numerator": _class_function_poly(report.common_numerator),
        }
    if table is not None:
        document["character_table"] = encode_table(table)
    if report.decomposition is not None:
        document["Hstar_decomposition"] = [encode_decomposition(d) for d in report.decomposition]
    if report.lin_comb is not None:
        document["Hstar_as_lin_comb"] = {
            label: encode_rational_function(rf) if rf is not None else None
            for label, rf in zip(report.labels, report.lin_comb)
        }
    return document


def to_validation(report: ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "violations": [{"kind": v.kind, "detail": v.detail} for v in report.violations],
    }


def to_permrep(result: PermrepResult) -> dict:
    return {
        "Hstar": _class_function_poly(result.hstar),
        "invariant_interval": result.invariant_interval,
        "notes": list(result.notes),
    }


def to_orbit_series(result: OrbitSeriesResult) -> dict:
    return {
        "numerator": _class_function_poly(result.numerator),
        "dim": result.dim,
        "chi_tP": _class_function_poly(result.chi_tP),
    }


def to_polynomiality(verdict: PolynomialityVerdict) -> dict:
    return {
        "case": verdict.case,
        "is_polynomial": verdict.is_polynomial,
        "even_cycles": verdict.even_cycles,
        "max_incompatible_edges": verdict.max_incompatible_edges,
        "witness": [list(e) for e in verdict.witness.edges] if verdict.witness else None,
    }


def to_zonotope(graph: Graph, sigma: list[int], vertices, series: RationalSeries, quasi,
                verdict: PolynomialityVerdict) -> dict:
    return {
        "graph": graph.to_dict(),
        "automorphism": sigma,
        "fixed_vertices": _points(vertices),
        "ehrhart_series": encode_series(series),
        "quasipolynomial": encode_quasipolynomial(quasi),
        "polynomiality": to_polynomiality(verdict),
    }


def to_path_effectiveness(report: PathEffectiveness) -> dict:
    return {
        "n": report.n,
        "trivial": [rational_string(a) for a in report.trivial],
        "alternating": [rational_string(b) for b in report.alternating],
        "is_effective": report.is_effective,
    }


def to_hypersimplex(
    k: int,
    n: int,
    characters: list[ClassFunction],
    formula: list[Polynomial],
    dosps: list[DecoratedOSP],
    classes: list[int],
) -> dict:
    """Per-winding-number characters, the closed formula per class, and the partitions."""
    return {
        "k": k,
        "n": n,
        "class_shifts": classes,
        "winding_characters": [encode_class_function(chi) for chi in characters],
        "winding_counts": [encode_scalar(chi.degree) for chi in characters],
        "formula": {str(s): encode_polynomial(p) for s, p in zip(classes, formula)},
        "dosps": [{"dosp": str(x), "winding_number": x.winding_number} for x in dosps],
    }


def to_prime_permutahedron(report: PrimePermutahedronReport) -> dict:
    return {
        "p": report.p,
        "hstar": list(report.hstar),
        "closed_form": [
            {"trivial": trivial, "regular": regular} for trivial, regular in report.closed_form
        ],
        "forest_orbits": report.forest_orbits,
    }


def to_certificate(verdict: HypersurfaceVerdict) -> dict:
    return verdict.to_dict()
