"""Equivariant Ehrhart - exact equivariant Ehrhart theory of lattice polytopes under finite groups."""

from equivariant_ehrhart.action import PolytopeAction, bind, symmetric_table_for_action
from equivariant_ehrhart.cache import Cache, FileCache, MemoryCache
from equivariant_ehrhart.certificates import (
    HypersurfaceVerdict,
    hypersurface_verdict,
    odd_rectangle_obstruction,
    sufficient_certificate,
)
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.equivariant import (
    ChiReport,
    EquivariantSeries,
    HStarReport,
    HTildeReport,
    chi_tP,
    equivariant_series,
    h_tilde,
    hstar,
    restrict_hstar,
)
from equivariant_ehrhart.errors import EhrhartError
from equivariant_ehrhart.events import EventType, ProgressEvent
from equivariant_ehrhart.groups import (
    CharacterTable,
    ClassFunction,
    FiniteGroup,
    character_table_cyclic,
    character_table_elementary2,
    character_table_symmetric,
    decompose,
)
from equivariant_ehrhart.models import ClassResult, PipelineResult, Statistics
from equivariant_ehrhart.pipeline import EquivariantEhrhartPipeline, compute_equivariant_series
from equivariant_ehrhart.polytope import LatticePolytope, ehrhart_polynomial, ehrhart_series
from equivariant_ehrhart.special import (
    cube_rotation_action,
    hstar_trivial_fixed,
    permutahedron,
    permutahedron_action,
    prime_permutahedron_report,
)

__all__ = [
    # Polytopes and actions
    "LatticePolytope",
    "PolytopeAction",
    "bind",
    "ehrhart_series",
    "ehrhart_polynomial",
    # Groups
    "FiniteGroup",
    "ClassFunction",
    "CharacterTable",
    "character_table_cyclic",
    "character_table_symmetric",
    "character_table_elementary2",
    "symmetric_table_for_action",
    "decompose",
    # Equivariant series
    "EquivariantSeries",
    "HTildeReport",
    "HStarReport",
    "ChiReport",
    "equivariant_series",
    "h_tilde",
    "hstar",
    "chi_tP",
    "restrict_hstar",
    # Pipeline
    "ComputeConfig",
    "EquivariantEhrhartPipeline",
    "compute_equivariant_series",
    "PipelineResult",
    "ClassResult",
    "Statistics",
    "EventType",
    "ProgressEvent",
    # Cache
    "Cache",
    "MemoryCache",
    "FileCache",
    # Families and certificates
    "permutahedron",
    "permutahedron_action",
    "cube_rotation_action",
    "hstar_trivial_fixed",
    "prime_permutahedron_report",
    "HypersurfaceVerdict",
    "sufficient_certificate",
    "odd_rectangle_obstruction",
    "hypersurface_verdict",
    # Errors
    "EhrhartError",
]
