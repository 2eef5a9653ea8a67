"""Input schemas, canonical JSON encoding and report formatters.

- schemas: pydantic models of the polytope, group, decomposition, graph and
  character-table files
- serialization: exact values to JSON
- formatters: reports to JSON documents
"""

from equivariant_ehrhart.output.formatters import (
    to_certificate,
    to_chi,
    to_ee_series,
    to_ehrhart,
    to_fixed_polytopes,
    to_hstar,
    to_hypersimplex,
    to_orbit_series,
    to_path_effectiveness,
    to_permrep,
    to_prime_permutahedron,
    to_validation,
    to_zonotope,
)
from equivariant_ehrhart.output.schemas import (
    CharacterTableInput,
    DecompositionInput,
    GraphInput,
    GroupInput,
    PolytopeInput,
    load_input,
)
from equivariant_ehrhart.output.serialization import dumps

__all__ = [
    # Formatters
    "to_certificate",
    "to_chi",
    "to_ee_series",
    "to_ehrhart",
    "to_fixed_polytopes",
    "to_hstar",
    "to_hypersimplex",
    "to_orbit_series",
    "to_path_effectiveness",
    "to_permrep",
    "to_prime_permutahedron",
    "to_validation",
    "to_zonotope",
    # Schemas
    "PolytopeInput",
    "GroupInput",
    "DecompositionInput",
    "GraphInput",
    "CharacterTableInput",
    "load_input",
    # Encoding
    "dumps",
]
