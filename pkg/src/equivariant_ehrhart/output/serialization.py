"""Canonical JSON encoders for exact values.

Rationals are strings ("p/q" or "p"), cyclotomic numbers that are not
rational are {"conductor": N, "coeffs": [...]}, polynomials are coefficient
arrays ascending by degree.
"""

import json
from fractions import Fraction
from typing import Any, Callable

from equivariant_ehrhart.arith.cyclotomic import Cyclotomic
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.quasipolynomial import Quasipolynomial
from equivariant_ehrhart.arith.series import RationalFunction, RationalSeries
from equivariant_ehrhart.groups.characters import CharacterTable, ClassFunction, Decomposition
from equivariant_ehrhart.groups.group import FiniteGroup, images
from equivariant_ehrhart.utils import rational_string


def encode_scalar(value: Any) -> Any:
    """Rationals and cyclotomic numbers; anything else passes through."""
    if isinstance(value, Cyclotomic):
        if value.is_rational():
            return rational_string(value.to_fraction())
        return {"conductor": value.conductor, "coeffs": [rational_string(c) for c in value.coeffs]}
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return rational_string(value)
    if isinstance(value, ClassFunction):
        return encode_class_function(value)
    return value


def decode_scalar(value: Any) -> Cyclotomic:
    if isinstance(value, dict):
        return Cyclotomic(int(value["conductor"]), [Fraction(str(c)) for c in value["coeffs"]])
    return Cyclotomic.rational(Fraction(str(value)))


def encode_class_function(chi: ClassFunction) -> list:
    return [encode_scalar(v) for v in chi.values]


def encode_polynomial(poly: Polynomial, encode: Callable[[Any], Any] = encode_scalar) -> list:
    return [encode(c) for c in poly.coeffs]


def encode_rational_function(rf: RationalFunction) -> dict:
    return {
        "numerator": encode_polynomial(rf.numerator),
        "denominator": encode_polynomial(rf.denominator),
    }


def encode_series(series: RationalSeries) -> dict:
    return {
        "numerator": encode_polynomial(series.numerator),
        "denominator_factors": [[a, m] for a, m in series.denominator_factors],
    }


def encode_quasipolynomial(quasi: Quasipolynomial) -> dict:
    return {
        "period": quasi.period,
        "constituents": [encode_polynomial(c) for c in quasi.constituents],
    }


def encode_decomposition(dec: Decomposition) -> dict:
    return {
        "multiplicities": {label: encode_scalar(m) for label, m in dec.as_dict().items()},
        "is_virtual": dec.is_virtual,
        "is_effective": dec.is_effective,
    }


def encode_group(group: FiniteGroup) -> dict:
    return {
        "order": group.order,
        "conjugacy_class_reps": [list(images(rep)) for rep in group.class_representatives],
        "class_sizes": group.class_sizes,
    }


def encode_table(table: CharacterTable) -> dict:
    return {
        "labels": list(table.labels),
        "irreducibles": [encode_class_function(chi) for chi in table.irreducibles],
    }


def dumps(document: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "encode_scalar",
    "decode_scalar",
    "encode_class_function",
    "encode_polynomial",
    "encode_rational_function",
    "encode_series",
    "encode_quasipolynomial",
    "encode_decomposition",
    "encode_group",
    "encode_table",
    "dumps",
]
