"""Pydantic models of the JSON input files accepted by the command line."""

from fractions import Fraction
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, Field, field_validator, model_validator

from equivariant_ehrhart.action import PolytopeAction, bind
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.errors import InvalidInput
from equivariant_ehrhart.groups.characters import CharacterTable, character_table_from_rows
from equivariant_ehrhart.groups.group import FiniteGroup
from equivariant_ehrhart.halfopen import IntervalPartition, Triangulation
from equivariant_ehrhart.output.serialization import decode_scalar
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.zonotope import Graph

M = TypeVar("M", bound=BaseModel)

RationalText = str | int


def _parse_rational(value: RationalText) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {value!r}") from e


class PolytopeInput(BaseModel):
    """Polytope file: {"vertices": [["p/q", ...], ...]}."""
    vertices: list[list[RationalText]] = Field(
        min_length=1,
        description="Vertex coordinates as rational strings or integers",
    )

    @field_validator("vertices")
    @classmethod
    def _check_rationals(cls, vertices: list[list[RationalText]]) -> list[list[RationalText]]:
        for vertex in vertices:
            for c in vertex:
                _parse_rational(c)
        return vertices

    def to_polytope(self, config: ComputeConfig | None = None) -> LatticePolytope:
        config = config or ComputeConfig()
        points = [[_parse_rational(c) for c in v] for v in self.vertices]
        return LatticePolytope(points, face_dim_limit=config.face_dim_limit)


class GeneratorInput(BaseModel):
    """A group generator, either a vertex permutation or a matrix."""
    vertex_permutation: list[int] | None = Field(
        default=None, description="0-based image array on vertex indices"
    )
    matrix: list[list[RationalText]] | None = Field(
        default=None, description="Linear n x n or affine (n+1) x (n+1) matrix"
    )

    @model_validator(mode="after")
    def _exactly_one(self) -> "GeneratorInput":
        if (self.vertex_permutation is None) == (self.matrix is None):
            raise ValueError("a generator needs exactly one of vertex_permutation or matrix")
        return self


class GroupInput(BaseModel):
    """Group file: {"generators": [{"vertex_permutation": [...]} | {"matrix": [[...]]}]}."""
    generators: list[GeneratorInput] = Field(default_factory=list)

    def bind(self, polytope: LatticePolytope, config: ComputeConfig | None = None) -> PolytopeAction:
        config = config or ComputeConfig()
        perms = [g.vertex_permutation for g in self.generators if g.vertex_permutation is not None]
        matrices = [
            [[_parse_rational(c) for c in row] for row in g.matrix]
            for g in self.generators if g.matrix is not None
        ]
        return bind(polytope, perms, matrices, order_cap=config.order_cap)


class IntervalInput(BaseModel):
    lower: list[list[int]] = Field(default_factory=list)
    upper: list[list[int]]


class DecompositionInput(BaseModel):
    """Decomposition file: a lattice triangulation and a partition of its faces into intervals."""
    simplices: list[list[list[int]]] = Field(min_length=1)
    intervals: list[IntervalInput] = Field(min_length=1)

    def build(self, polytope: LatticePolytope) -> tuple[Triangulation, IntervalPartition]:
        triangulation = Triangulation.of(polytope, self.simplices)
        parts = IntervalPartition.of((i.lower, i.upper) for i in self.intervals)
        return triangulation, parts


class GraphInput(BaseModel):
    """Graph file: {"n": |V|, "edges": [[u, v], ...]}."""
    n: int = Field(ge=1, description="Number of vertices, labelled 0 .. n-1")
    edges: list[list[int]] = Field(default_factory=list)

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


class ClassInput(BaseModel):
    representative: list[int] = Field(description="0-based image array")
    size: int = Field(ge=1)


class CharacterTableInput(BaseModel):
    """Character-table file with explicit class representatives."""
    classes: list[ClassInput] = Field(min_length=1)
    irreducibles: list[list[RationalText | dict]] = Field(min_length=1)
    labels: list[str] | None = None

    def to_table(self, group: FiniteGroup) -> CharacterTable:
        rows = [[decode_scalar(v) for v in row] for row in self.irreducibles]
        for row in rows:
            if len(row) != len(self.classes):
                raise InvalidInput(
                    f"character row has {len(row)} values for {len(self.classes)} classes"
                )
        return character_table_from_rows(
            group,
            [c.representative for c in self.classes],
            [c.size for c in self.classes],
            rows,
            self.labels,
        )


def load_input(path: str | Path, model: type[M]) -> M:
    """Read and validate a JSON input file.

    Raises:
        InvalidInput: If the file does not exist
        pydantic.ValidationError: If the content does not match the model
    """
    path = Path(path)
    if not path.is_file():
        raise InvalidInput(f"input file not found: {path}", {"path": str(path)})
    return model.model_validate_json(path.read_text(encoding="utf-8"))


__all__ = [
    "PolytopeInput",
    "GeneratorInput",
    "GroupInput",
    "IntervalInput",
    "DecompositionInput",
    "GraphInput",
    "ClassInput",
    "CharacterTableInput",
    "load_input",
]
