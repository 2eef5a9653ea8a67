"""Finite permutation groups and their characters."""

from equivariant_ehrhart.groups.characters import (
    CharacterTable,
    ClassFunction,
    Decomposition,
    character_table_cyclic,
    character_table_elementary2,
    character_table_from_rows,
    character_table_symmetric,
    decompose,
    inner_product,
    partitions_descending,
    power_characters,
    restrict,
    symmetric_character,
)
from equivariant_ehrhart.groups.group import (
    ConjugacyClass,
    FiniteGroup,
    as_permutation,
    close_group,
    cycle_type,
    cyclic_group,
    elementary_abelian_2_group,
    images,
    symmetric_group,
)

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
