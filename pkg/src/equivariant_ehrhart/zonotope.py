"""Graphic zonotopes, their fixed polytopes and Stanley's zonotope formula.

For a simple graph on V = {0, ..., n-1} the graphic zonotope is the Minkowski
sum of the segments [e_u, e_v] over the edges. An automorphism sigma with
cycles sigma_1, ..., sigma_m acts on it by permuting coordinates; its fixed
polytope is again a zonotope, tiled by half-open parallelepipeds indexed by
the subforests of the sigma-connectivity graph.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterator, Literal, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy.combinatorics import Permutation, PermutationGroup

from equivariant_ehrhart.arith.eulerian import eulerian_polynomial
from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.quasipolynomial import Quasipolynomial
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.config import DEFAULT_ORDER_CAP
from equivariant_ehrhart.errors import (
    DegreeInconsistent,
    Dependent,
    InvalidInput,
    NotAutomorphism,
    TooLarge,
    TooManyGenerators,
    VerificationFailed,
)
from equivariant_ehrhart.groups.group import (
    FiniteGroup,
    PermutationLike,
    as_permutation,
    close_group,
)
from equivariant_ehrhart.polytope.lattice import rank, smith_invariants
from equivariant_ehrhart.polytope.lp import find_feasible_point
from equivariant_ehrhart.polytope.polytope import LatticePolytope

logger = logging.getLogger(__name__)

MAX_GRAPH_VERTICES = 8
MAX_ZONOTOPE_GENERATORS = 12

Edge = tuple[int, int]
Orientation = tuple[Edge, ...]


@dataclass(frozen=True)
class Graph:
    """A simple graph on the vertices 0 .. n-1.

    Attributes:
        n: Number of vertices
        edges: Sorted pairs (u, v) with u < v
    """
    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> Graph:
        """Validate and normalize an edge list.

        Raises:
            InvalidInput: On loops, repeated edges or labels outside 0 .. n-1
        """
        if n < 1:
            raise InvalidInput("a graph needs at least one vertex")
        normalized = set()
        for edge in edges:
            if len(edge) != 2:
                raise InvalidInput(f"edge {list(edge)} does not have two endpoints")
            u, v = sorted(int(x) for x in edge)
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if u < 0 or v >= n:
                raise InvalidInput(f"edge ({u}, {v}) leaves the vertex set 0..{n - 1}")
            if (u, v) in normalized:
                raise InvalidInput(f"edge ({u}, {v}) appears twice")
            normalized.add((u, v))
        return cls(n, tuple(sorted(normalized)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def incidence(self, subset: Sequence[int]) -> int:
        """inc(S): number of edges with at least one endpoint in S."""
        members = set(subset)
        return sum(1 for u, v in self.edges if u in members or v in members)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def _check_size(graph: Graph) -> None:
    if graph.n > MAX_GRAPH_VERTICES:
        raise TooLarge(
            f"graph has {graph.n} vertices; at most {MAX_GRAPH_VERTICES} are supported",
            {"vertices": graph.n, "limit": MAX_GRAPH_VERTICES},
        )


# Automorphisms and orientations


def automorphisms(graph: Graph) -> list[Permutation]:
    """All automorphisms of the graph, sorted by image array."""
    matcher = GraphMatcher(graph.nx_graph, graph.nx_graph)
    found = [Permutation([m[v] for v in range(graph.n)]) for m in matcher.isomorphisms_iter()]
    return sorted(found, key=lambda p: p.array_form)


def automorphism_group(graph: Graph, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Aut(graph) as a FiniteGroup on the vertex labels.

    Raises:
        OrderCapExceeded: If |Aut(graph)| exceeds order_cap
    """
    generators: list[Permutation] = []
    span = PermutationGroup([Permutation(list(range(graph.n)))])
    for perm in automorphisms(graph):
        if not span.contains(perm):
            generators.append(perm)
            span = PermutationGroup(generators)
    return close_group(generators, degree=graph.n, order_cap=order_cap)


def is_automorphism(graph: Graph, sigma: PermutationLike) -> bool:
    perm = as_permutation(sigma, graph.n)
    return all(graph.has_edge(perm(u), perm(v)) for u, v in graph.edges)


def _require_automorphism(graph: Graph, sigma: PermutationLike) -> Permutation:
    perm = as_permutation(sigma, graph.n)
    for u, v in graph.edges:
        if not graph.has_edge(perm(u), perm(v)):
            raise NotAutomorphism(
                f"edge ({u}, {v}) is mapped to the non-edge ({perm(u)}, {perm(v)})",
                {"edge": [u, v], "image": [perm(u), perm(v)]},
            )
    return perm


def acyclic_orientations(graph: Graph) -> list[Orientation]:
    """Acyclic orientations as tuples of directed edges (tail, head), one per edge.

    Every acyclic orientation is induced by a linear order of the vertices;
    orders inducing the same orientation are merged.
    """
    _check_size(graph)
    found: set[Orientation] = set()
    for order in permutations(range(graph.n)):
        position = {v: i for i, v in enumerate(order)}
        found.add(tuple(
            (u, v) if position[u] < position[v] else (v, u) for u, v in graph.edges
        ))
    return sorted(found)


def indegree_vector(graph: Graph, orientation: Orientation) -> tuple[int, ...]:
    """v_o = sum of indeg_o(v) e_v."""
    counts = [0] * graph.n
    for _tail, head in orientation:
        counts[head] += 1
    return tuple(counts)


def graphic_zonotope(graph: Graph) -> LatticePolytope:
    """Z_graph, the sum of the segments [e_u, e_v] over the edges.

    Raises:
        TooLarge: If the graph has more than 8 vertices
    """
    _check_size(graph)
    vertices = sorted({indegree_vector(graph, o) for o in acyclic_orientations(graph)})
    logger.debug("Graphic zonotope of %d-vertex graph has %d vertices", graph.n, len(vertices))
    return LatticePolytope(vertices)


def graphic_zonotope_contains(graph: Graph, point: Sequence) -> bool:
    """Membership through sum x_v = |E| and sum_{v in S} x_v <= inc(S) for every S.

    Raises:
        TooLarge: If the graph has more than 8 vertices
        InvalidInput: If the point has the wrong dimension
    """
    _check_size(graph)
    x = [Fraction(c) for c in point]
    if len(x) != graph.n:
        raise InvalidInput(f"point has {len(x)} coordinates, graph has {graph.n} vertices")
    if sum(x) != len(graph.edges):
        return False
    for size in range(1, graph.n):
        for subset in combinations(range(graph.n), size):
            if sum(x[v] for v in subset) > graph.incidence(subset):
                return False
    return True


# Connectivity graph


@dataclass(frozen=True)
class ConnectivityGraph:
    """The sigma-connectivity graph C(sigma).

    Nodes are the cycles of sigma; i and j are adjacent when some edge of
    the graph joins a vertex of sigma_i to a vertex of sigma_j.

    Attributes:
        graph: The underlying graph
        sigma: The automorphism
        cycles: Cycles of sigma (fixed points included), ordered by smallest member
        edges: Pairs (i, j), i < j, of adjacent cycles
        deg: deg[i][j], edges from one vertex of sigma_i into sigma_j
        edge_counts: E[i][j], edges between sigma_i and sigma_j (within sigma_i on the diagonal)
    """
    graph: Graph
    sigma: Permutation
    cycles: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    deg: tuple[tuple[int, ...], ...]
    edge_counts: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.cycles)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def as_graph(self) -> Graph:
        """C(sigma) as a simple graph on the cycle indices."""
        return Graph(self.m, self.edges)

    def generator(self, edge: Edge) -> tuple[int, ...]:
        """deg(sigma_i, sigma_j) e_{sigma_i} - deg(sigma_j, sigma_i) e_{sigma_j} for i < j."""
        i, j = edge
        vector = [0] * self.graph.n
        for v in self.cycles[i]:
            vector[v] = self.deg[i][j]
        for v in self.cycles[j]:
            vector[v] = -self.deg[j][i]
        return tuple(vector)

    def shift(self) -> tuple[Fraction, ...]:
        """sum_j 1/2 deg(sigma_j, sigma_j) e_{sigma_j}."""
        vector = [Fraction(0)] * self.graph.n
        for i, cycle in enumerate(self.cycles):
            for v in cycle:
                vector[v] = Fraction(self.deg[i][i], 2)
        return tuple(vector)


def _cycles(perm: Permutation, n: int) -> tuple[tuple[int, ...], ...]:
    cycles = [tuple(c) for c in perm.full_cyclic_form]
    covered = {v for c in cycles for v in c}
    cycles += [(v,) for v in range(n) if v not in covered]
    return tuple(sorted(cycles, key=min))


def connectivity_graph(graph: Graph, sigma: PermutationLike) -> ConnectivityGraph:
    """Build C(sigma) with its degree and edge-count tables.

    The degree deg(sigma_i, sigma_j) is measured at every vertex of sigma_i
    and must agree; E_ij = l_i deg(i, j) = l_j deg(j, i) and
    2 E_ii = l_i deg(i, i) are checked for every pair.

    Raises:
        NotAutomorphism: If sigma does not preserve the edge set
        DegreeInconsistent: If a degree or edge-count identity fails
    """
    perm = _require_automorphism(graph, sigma)
    cycles = _cycles(perm, graph.n)
    m = len(cycles)
    index = {v: i for i, c in enumerate(cycles) for v in c}
    neighbors = graph.nx_graph

    deg = [[0] * m for _ in range(m)]
    for i, cycle in enumerate(cycles):
        for j, other in enumerate(cycles):
            targets = set(other)
            counts = {sum(1 for w in neighbors[v] if w in targets) for v in cycle}
            if len(counts) != 1:
                raise DegreeInconsistent(
                    f"degree from cycle {i} into cycle {j} is not constant",
                    {"cycle": list(cycle), "into": list(other), "counts": sorted(counts)},
                )
            deg[i][j] = counts.pop()

    counts_table = [[0] * m for _ in range(m)]
    for u, v in graph.edges:
        i, j = index[u], index[v]
        counts_table[i][j] += 1
        if i != j:
            counts_table[j][i] += 1

    lengths = [len(c) for c in cycles]
    for i in range(m):
        if 2 * counts_table[i][i] != lengths[i] * deg[i][i]:
            raise DegreeInconsistent(
                f"cycle {i} has {counts_table[i][i]} internal edges, expected l*deg/2",
                {"cycle": i},
            )
        for j in range(i + 1, m):
            if not lengths[i] * deg[i][j] == lengths[j] * deg[j][i] == counts_table[i][j]:
                raise DegreeInconsistent(
                    f"edge count between cycles {i} and {j} disagrees with the degrees",
                    {"pair": [i, j], "edges": counts_table[i][j]},
                )

    edges = tuple((i, j) for i in range(m) for j in range(i + 1, m) if counts_table[i][j])
    return ConnectivityGraph(
        graph=graph,
        sigma=perm,
        cycles=cycles,
        edges=edges,
        deg=tuple(tuple(row) for row in deg),
        edge_counts=tuple(tuple(row) for row in counts_table),
    )


def fixed_zonotope_vertices(graph: Graph, sigma: PermutationLike) -> list[tuple[Fraction, ...]]:
    """Vertices w_o of the fixed polytope, one per acyclic orientation o of C(sigma).

    The coordinate of w_o on sigma_i is
    1/2 deg(sigma_i, sigma_i) + sum over arcs sigma_j -> sigma_i of deg(sigma_i, sigma_j).

    Raises:
        NotAutomorphism: If sigma does not preserve the edge set
        VerificationFailed: If two orientations give the same point
    """
    conn = connectivity_graph(graph, sigma)
    orientations = acyclic_orientations(conn.as_graph())
    points = []
    for orientation in orientations:
        weight = [Fraction(conn.deg[i][i], 2) for i in range(conn.m)]
        for tail, head in orientation:
            weight[head] += conn.deg[head][tail]
        point = [Fraction(0)] * graph.n
        for i, cycle in enumerate(conn.cycles):
            for v in cycle:
                point[v] = weight[i]
        points.append(tuple(point))
    if len(set(points)) != len(points):
        raise VerificationFailed(
            "acyclic orientations of the connectivity graph gave coinciding vertices",
            {"orientations": len(points), "distinct": len(set(points))},
        )
    return sorted(points)


def fixed_zonotope_minkowski_contains(conn: ConnectivityGraph, point: Sequence) -> bool:
    """Membership in shift + sum of [deg(j,i) e_{sigma_j}, deg(i,j) e_{sigma_i}] over edges.

    Decided by an exact feasibility problem in the segment parameters.
    """
    target = [Fraction(c) for c in point]
    base = list(conn.shift())
    directions = []
    for i, j in conn.edges:
        for v in conn.cycles[j]:
            base[v] += conn.deg[j][i]
        directions.append(conn.generator((i, j)))
    rhs = [t - b for t, b in zip(target, base)]
    k = len(directions)
    if not k:
        return all(r == 0 for r in rhs)
    # variables: lambda_e, then slacks s_e with lambda_e + s_e = 1
    rows = [[Fraction(d[c]) for d in directions] + [Fraction(0)] * k for c in range(conn.graph.n)]
    for e in range(k):
        row = [Fraction(0)] * (2 * k)
        row[e] = row[k + e] = Fraction(1)
        rows.append(row)
    return find_feasible_point(rows, rhs + [Fraction(1)] * k) is not None


# Half-open parallelepipeds and Stanley's formula


def halfopen_parallelepiped_volume(vectors: Sequence[Sequence[int]]) -> int:
    """Lattice points in the half-open parallelepiped spanned by independent vectors.

    Equals the index of the generated lattice in its saturation, the product
    of the invariant factors.

    Raises:
        Dependent: If the vectors are linearly dependent
    """
    rows = [[int(c) for c in v] for v in vectors]
    if not rows:
        return 1
    if rank(rows) < len(rows):
        raise Dependent(
            "parallelepiped generators are linearly dependent",
            {"vectors": rows},
        )
    return math.prod(smith_invariants(rows))


def zonotope_ehrhart(generators: Sequence[Sequence[int]]) -> Polynomial[int]:
    """Ehrhart polynomial of sum [0, s_i]: sum over independent subsets T of vol(T) t^|T|.

    Raises:
        TooManyGenerators: If more than 12 generators are given
    """
    vectors = [tuple(int(c) for c in g) for g in generators]
    if len(vectors) > MAX_ZONOTOPE_GENERATORS:
        raise TooManyGenerators(
            f"{len(vectors)} generators; at most {MAX_ZONOTOPE_GENERATORS} are supported",
            {"generators": len(vectors), "limit": MAX_ZONOTOPE_GENERATORS},
        )
    coeffs = [0] * (len(vectors) + 1)
    for size in range(len(vectors) + 1):
        for subset in combinations(vectors, size):
            if size and rank(subset) < size:
                continue
            coeffs[size] += halfopen_parallelepiped_volume(subset)
    return Polynomial(coeffs)


# Subforests of the connectivity graph


@dataclass(frozen=True)
class Subforest:
    """An acyclic edge subset of C(sigma) on all m nodes.

    Attributes:
        edges: Chosen edges (i, j), i < j
        components: Node sets of the connected components, isolated nodes included
    """
    edges: tuple[Edge, ...]
    components: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def c(self) -> int:
        return len(self.components)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def _components(parent: list[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for x in range(len(parent)):
        groups.setdefault(_find(parent, x), []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def subforests(conn: ConnectivityGraph) -> Iterator[Subforest]:
    """Every subforest of C(sigma), the empty forest first."""
    edges = conn.edges

    def extend(position: int, chosen: list[Edge], parent: list[int]) -> Iterator[Subforest]:
        if position == len(edges):
            yield Subforest(tuple(chosen), _components(parent))
            return
        yield from extend(position + 1, chosen, parent)
        i, j = edges[position]
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            joined = list(parent)
            joined[max(ri, rj)] = min(ri, rj)
            yield from extend(position + 1, chosen + [(i, j)], joined)

    yield from extend(0, [], list(range(conn.m)))


def subforest_volume(conn: ConnectivityGraph, forest: Subforest) -> Fraction:
    """(prod of E_ij over edges) * (prod of 1/l_i) * (prod over components of gcd of l_i)."""
    lengths = conn.lengths
    volume = Fraction(1)
    for i, j in forest.edges:
        volume *= conn.edge_counts[i][j]
    for length in lengths:
        volume /= length
    for component in forest.components:
        volume *= math.gcd(*(lengths[i] for i in component))
    return volume


def two_valuation(k: int) -> float:
    """Exponent of the largest power of 2 dividing k; val(0) is infinite."""
    if k == 0:
        return math.inf
    k = abs(k)
    return (k & -k).bit_length() - 1


def is_compatible(conn: ConnectivityGraph, forest: Subforest) -> bool:
    """Every component T has min val(l_i) <= val(sum of E_jj over T)."""
    lengths = conn.lengths
    for component in forest.components:
        internal = sum(conn.edge_counts[j][j] for j in component)
        if min(two_valuation(lengths[i]) for i in component) > two_valuation(internal):
            return False
    return True


def fixed_zonotope_quasipolynomial(graph: Graph, sigma: PermutationLike) -> Quasipolynomial:
    """L(Z^sigma; t): all subforests for even t, compatible ones for odd t.

    Each subforest F contributes vol(F) t^(m - c(F)). The result is
    normalized, so it collapses to period 1 when every subforest is compatible.
    """
    conn = connectivity_graph(graph, sigma)
    even = [Fraction(0)] * conn.m
    odd = [Fraction(0)] * conn.m
    for forest in subforests(conn):
        k = conn.m - forest.c
        volume = subforest_volume(conn, forest)
        even[k] += volume
        if is_compatible(conn, forest):
            odd[k] += volume
    return Quasipolynomial(2, (Polynomial(even), Polynomial(odd))).normalized()


def fixed_zonotope_series(graph: Graph, sigma: PermutationLike) -> RationalSeries:
    """Ehr(Z^sigma; z) assembled from the subforest tiling.

    A compatible F contributes vol A_k(z) / (1 - z)^(k+1); an incompatible F
    only has lattice points in even dilates and contributes
    2^k vol A_k(z^2) / (1 - z^2)^(k+1), where k = m - c(F) and A_0 = 1.
    """
    conn = connectivity_graph(graph, sigma)
    total = RationalSeries(Polynomial())
    for forest in subforests(conn):
        k = conn.m - forest.c
        volume = subforest_volume(conn, forest)
        eulerian = eulerian_polynomial(k)
        if is_compatible(conn, forest):
            term = RationalSeries.over(eulerian.map(lambda c: volume * c), 1, k + 1)
        else:
            scale = volume * 2 ** k
            term = RationalSeries.over(
                eulerian.substitute_power(2).map(lambda c: scale * c), 2, k + 1
            )
        total = total + term
    return total


@dataclass(frozen=True)
class PolynomialityVerdict:
    """Whether H*(Z_graph; z)(sigma) is a polynomial, and why.

    Attributes:
        case: "a" (all cycles odd), "b" (even cycles have even self-degree),
            "c" (enough even cycles to cancel the pole at -1) or "non-polynomial"
        even_cycles: Number of cycles of even length
        max_incompatible_edges: Largest edge count of an incompatible subforest,
            None when every subforest is compatible
        witness: An incompatible subforest of that size
    """
    case: Literal["a", "b", "c", "non-polynomial"]
    even_cycles: int
    max_incompatible_edges: int | None = None
    witness: Subforest | None = None

    @property
    def is_polynomial(self) -> bool:
        return self.case != "non-polynomial"


def classify_polynomiality(graph: Graph, sigma: PermutationLike) -> PolynomialityVerdict:
    """Decide polynomiality of H* at sigma from cycle lengths and self-degrees.

    The pole of Ehr(Z^sigma; z) at z = -1 has order one more than the largest
    incompatible subforest; det(I - z rho(sigma)) vanishes there to the order
    of the number of even cycles.
    """
    conn = connectivity_graph(graph, sigma)
    lengths = conn.lengths
    even = [i for i, length in enumerate(lengths) if length % 2 == 0]
    if not even:
        return PolynomialityVerdict("a", 0)
    if all(conn.deg[i][i] % 2 == 0 for i in even):
        return PolynomialityVerdict("b", len(even))

    witness = None
    for forest in subforests(conn):
        if is_compatible(conn, forest):
            continue
        if witness is None or len(forest.edges) > len(witness.edges):
            witness = forest
    if witness is None:
        raise VerificationFailed(
            "an even cycle with odd self-degree must leave an incompatible subforest",
            {"cycle_lengths": list(lengths)},
        )
    size = len(witness.edges)
    case = "c" if len(even) > size else "non-polynomial"
    logger.debug(
        "sigma=%s: %d even cycles, largest incompatible subforest has %d edges",
        list(conn.sigma.array_form), len(even), size,
    )
    return PolynomialityVerdict(case, len(even), size, witness)


# Path graphs


@dataclass(frozen=True)
class PathEffectiveness:
    """H*(Z_path; z) = sum_k (a_k chi_triv + b_k chi_alt) z^k under the reversal.

    Attributes:
        n: Number of vertices (odd)
        identity: Coefficients of A_{n-1}(z)/z, equal to a_k + b_k
        reversal: Coefficients of (1+z)^((n-1)/2) A_{(n-1)/2}(z)/z, equal to a_k - b_k
        trivial: a_k
        alternating: b_k
    """
    n: int
    identity: tuple[int, ...]
    reversal: tuple[int, ...]
    trivial: tuple[Fraction, ...]
    alternating: tuple[Fraction, ...]

    @property
    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.trivial) and all(b >= 0 for b in self.alternating)


def _eulerian_numbers(n: int) -> Polynomial[int]:
    """A_n(z) / z for n >= 1."""
    return Polynomial(eulerian_polynomial(n).coeffs[1:])


def path_graph_effectiveness(n: int) -> PathEffectiveness:
    """Split H* of the path zonotope with odd n into its two isotypic parts.

    Raises:
        InvalidInput: If n is even or smaller than 3
    """
    if n < 3 or n % 2 == 0:
        raise InvalidInput("the reversal of the path needs an odd number n >= 3 of vertices")
    half = (n - 1) // 2
    identity = _eulerian_numbers(n - 1)
    reversal = Polynomial((1, 1)) ** half * _eulerian_numbers(half)
    length = max(len(identity), len(reversal))
    plus = identity.padded(length)
    minus = reversal.padded(length)
    trivial = tuple(Fraction(p + q, 2) for p, q in zip(plus, minus))
    alternating = tuple(Fraction(p - q, 2) for p, q in zip(plus, minus))
    return PathEffectiveness(n, tuple(plus), tuple(minus), trivial, alternating)


__all__ = [
    "Graph",
    "ConnectivityGraph",
    "Subforest",
    "PolynomialityVerdict",
    "PathEffectiveness",
    "automorphisms",
    "automorphism_group",
    "is_automorphism",
    "acyclic_orientations",
    "indegree_vector",
    "graphic_zonotope",
    "graphic_zonotope_contains",
    "connectivity_graph",
    "fixed_zonotope_vertices",
    "fixed_zonotope_minkowski_contains",
    "halfopen_parallelepiped_volume",
    "zonotope_ehrhart",
    "subforests",
    "subforest_volume",
    "two_valuation",
    "is_compatible",
    "fixed_zonotope_quasipolynomial",
    "fixed_zonotope_series",
    "classify_polynomiality",
    "path_graph_effectiveness",
]
