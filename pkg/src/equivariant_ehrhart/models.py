"""Result structures for pipeline runs."""

from dataclasses import dataclass

from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.equivariant import EquivariantSeries


@dataclass
class ClassResult:
    """Ehrhart data of the fixed polytope of one class representative.

    Attributes:
        index: Position of the class in the group's class order
        representative: Image array of the representative on vertex indices
        fixed_vertices: Vertices of the fixed polytope P^g
        fixed_dim: Dimension of the fixed polytope
        series: Ehr(P^g; z)
        cached: Whether the series came from the cache
    """
    index: int
    representative: tuple[int, ...]
    fixed_vertices: tuple
    fixed_dim: int
    series: RationalSeries
    cached: bool


@dataclass
class Statistics:
    """Statistics for a pipeline run.

    Attributes:
        total_classes: Number of conjugacy classes
        computed: Number of series computed from lattice counts
        cache_hits: Number of series read from the cache
        elapsed_time: Total time in seconds
    """
    total_classes: int
    computed: int
    cache_hits: int
    elapsed_time: float


@dataclass
class PipelineResult:
    """Equivariant series of an action together with per-class details.

    Attributes:
        series: EE(P; z) per class
        classes: Per-class results, aligned with the conjugacy classes
        statistics: Run statistics
    """
    series: EquivariantSeries
    classes: list[ClassResult]
    statistics: Statistics
