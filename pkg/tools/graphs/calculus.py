"""Intersection graphs: reduction, terminal classification and evaluation."""

import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from shared.errors import CrossCheckError, InvalidArgumentError, SingularGenusError
from shared.logger import get_logger
from tools.combinatorics.rational import RationalLike, as_rational
from tools.symbolic.values import ZERO, SymbolicValue

logger = get_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class IntersectionGraph:
    """
    Multigraph on vertices 1..num_vertices.

    Each edge (j, k) stands for one tautological bundle; j == k is a loop.
    Edges are stored as sorted (min, max) pairs in sorted order, so two
    graphs that differ only by edge order compare equal.
    """

    num_vertices: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise InvalidArgumentError(
                f"A graph needs at least one vertex, got {self.num_vertices}"
            )
        normalized = []
        for edge in self.edges:
            j, k = edge
            for endpoint in (j, k):
                if not 1 <= endpoint <= self.num_vertices:
                    raise InvalidArgumentError(
                        f"Edge endpoint {endpoint} outside 1..{self.num_vertices}"
                    )
            normalized.append((min(j, k), max(j, k)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> "IntersectionGraph":
        """Build a graph from any iterable of 2-element endpoint sequences."""
        pairs = []
        for edge in edges:
            if len(edge) != 2:
                raise InvalidArgumentError(f"Edges need exactly two endpoints, got {list(edge)}")
            pairs.append((int(edge[0]), int(edge[1])))
        return cls(num_vertices, tuple(pairs))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def to_multigraph(self) -> nx.MultiGraph:
        """networkx view with every vertex present, isolated ones included."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, self.num_vertices + 1))
        graph.add_edges_from(self.edges)
        return graph


class TerminalKind(str, Enum):
    """Shapes a connected component can reduce to."""

    CIRCLE = "circle"
    FIGURE_EIGHT = "figure-eight"
    DUMBBELL = "dumbbell"
    THETA = "theta"
    VANISHING = "vanishing"


@dataclass(frozen=True)
class TerminalForm:
    """
    A classified component.

    Attributes:
        kind: Terminal shape
        circle_count: Number of components b0 of the graph the component came from
    """

    kind: TerminalKind
    circle_count: int = 0


@dataclass(frozen=True)
class GraphSignature:
    """Everything evaluate_graph depends on: degrees, b0 and the reduced component shapes."""

    degrees: Tuple[int, ...]
    num_vertices: int
    num_edges: int
    components: int
    terminals: Tuple[TerminalKind, ...]


_TERMINAL_EDGES = {
    (1, ((1, 1),)): TerminalKind.CIRCLE,
    (1, ((1, 1), (1, 1))): TerminalKind.FIGURE_EIGHT,
    (2, ((1, 1), (1, 2), (2, 2))): TerminalKind.DUMBBELL,
    (2, ((1, 2), (1, 2), (1, 2))): TerminalKind.THETA,
}


def vertex_degrees(graph: IntersectionGraph) -> List[int]:
    """Degree of vertices 1..r in order; a loop counts twice."""
    degrees = [0] * graph.num_vertices
    for j, k in graph.edges:
        degrees[j - 1] += 1
        degrees[k - 1] += 1
    return degrees


def split_components(graph: IntersectionGraph) -> List[IntersectionGraph]:
    """
    Split into connected components.

    Each component is relabeled onto 1..size keeping the relative order of
    its vertices; components are listed by their smallest original vertex.
    Isolated vertices become single-vertex components without edges.
    """
    multigraph = graph.to_multigraph()
    components = sorted(
        (sorted(nodes) for nodes in nx.connected_components(multigraph)), key=lambda c: c[0]
    )

    result = []
    for nodes in components:
        relabel = {old: new for new, old in enumerate(nodes, start=1)}
        edges = tuple((relabel[j], relabel[k]) for j, k in graph.edges if j in relabel)
        result.append(IntersectionGraph(len(nodes), edges))
    return result


def _contractible_vertices(graph: IntersectionGraph) -> List[int]:
    degrees = vertex_degrees(graph)
    loops = Counter(j for j, k in graph.edges if j == k)
    return [v for v in range(1, graph.num_vertices + 1) if degrees[v - 1] == 2 and loops[v] == 0]


def _contract_vertex(graph: IntersectionGraph, vertex: int) -> IntersectionGraph:
    incident = [edge for edge in graph.edges if vertex in edge]
    rest = [edge for edge in graph.edges if vertex not in edge]
    ends = [j if k == vertex else k for j, k in incident]
    rest.append((ends[0], ends[1]))

    def shift(x: int) -> int:
        return x - 1 if x > vertex else x

    return IntersectionGraph(graph.num_vertices - 1, tuple((shift(j), shift(k)) for j, k in rest))


def contract_degree_two(
    graph: IntersectionGraph, rng: Optional[random.Random] = None
) -> IntersectionGraph:
    """
    Remove degree-2 vertices that do not carry a loop.

    The edges (v1, v), (v, v2) are replaced by (v1, v2), which is a loop
    when v1 == v2. This repeats until no such vertex is left. Without an
    rng the lowest vertex goes first; with one, the next vertex is drawn
    at random, which is how contraction-order independence is checked.

    Args:
        graph: Graph to reduce
        rng: Optional random source for the contraction order

    Returns:
        The fully contracted graph
    """
    current = graph
    while current.num_vertices > 1:
        candidates = _contractible_vertices(current)
        if not candidates:
            break
        vertex = rng.choice(candidates) if rng is not None else candidates[0]
        current = _contract_vertex(current, vertex)
    return current


def classify_terminal(component: IntersectionGraph) -> TerminalForm:
    """
    Classify a connected, fully contracted component.

    Args:
        component: Connected component on which contract_degree_two is a fixed point

    Returns:
        TerminalForm; anything that is not one of the four shapes is VANISHING
    """
    kind = _TERMINAL_EDGES.get((component.num_vertices, component.edges), TerminalKind.VANISHING)
    return TerminalForm(kind)


def canonical_signature(
    graph: IntersectionGraph, rng: Optional[random.Random] = None
) -> GraphSignature:
    """
    Value-determining form of a graph.

    Two graphs with equal signatures have equal values at every genus.

    Args:
        graph: Graph to reduce
        rng: Optional random source for the contraction order

    Returns:
        GraphSignature
    """
    if rng is None:
        return _cached_signature(graph)
    return _build_signature(graph, rng)


@lru_cache(maxsize=None)
def _cached_signature(graph: IntersectionGraph) -> GraphSignature:
    return _build_signature(graph, None)


def _build_signature(graph: IntersectionGraph, rng: Optional[random.Random]) -> GraphSignature:
    components = split_components(graph)
    terminals = sorted(
        (classify_terminal(contract_degree_two(component, rng)).kind for component in components),
        key=lambda kind: kind.value,
    )
    return GraphSignature(
        degrees=tuple(sorted(vertex_degrees(graph))),
        num_vertices=graph.num_vertices,
        num_edges=graph.num_edges,
        components=len(components),
        terminals=tuple(terminals),
    )


def terminal_value(kind: TerminalKind, g: RationalLike) -> SymbolicValue:
    """
    Value of a single connected terminal shape.

    Raises:
        SingularGenusError: If g = 1 for a non-circle shape
    """
    g = as_rational(g)
    if kind == TerminalKind.CIRCLE:
        return SymbolicValue.of_scalar(-2 * g)
    if kind == TerminalKind.VANISHING:
        return ZERO
    if g == 1:
        raise SingularGenusError(f"The {kind.value} value has a pole at g = 1")
    if kind == TerminalKind.FIGURE_EIGHT:
        return SymbolicValue(omega2=g / (g - 1), hnt=4 * (g - 1))
    if kind == TerminalKind.DUMBBELL:
        return SymbolicValue(hnt=-4 * (g - 1) ** 2)
    return SymbolicValue(omega2=(2 * g + 1) / (2 * g - 2), phi=Fraction(-1), hnt=6 * (g - 1))


def evaluate_graph(
    graph: IntersectionGraph, g: RationalLike, rng: Optional[random.Random] = None
) -> SymbolicValue:
    """
    Intersection number of the bundle product encoded by a graph.

    With r vertices and n edges the value is zero unless n is r or r + 1,
    and zero if some vertex has degree at most one. For n = r the graph is
    a union of b0 cycles with value (-2g)^b0. For n = r + 1 exactly one
    component reduces to a figure-eight, dumbbell or theta; its value is
    multiplied by (-2g)^(b0 - 1).

    Args:
        graph: Graph to evaluate
        g: Genus as an exact rational
        rng: Optional random contraction order

    Returns:
        SymbolicValue

    Raises:
        SingularGenusError: If g = 1 and a non-circle terminal occurs
        CrossCheckError: If reduction reaches a shape the degree count rules out
    """
    g = as_rational(g)
    r, n = graph.num_vertices, graph.num_edges
    if n not in (r, r + 1):
        return ZERO
    if min(vertex_degrees(graph)) <= 1:
        return ZERO
    return _signature_value(canonical_signature(graph, rng), g)


@lru_cache(maxsize=None)
def _signature_value(signature: GraphSignature, g: Fraction) -> SymbolicValue:
    circle = -2 * g
    non_circles = [kind for kind in signature.terminals if kind != TerminalKind.CIRCLE]

    if signature.num_edges == signature.num_vertices:
        if non_circles:
            raise CrossCheckError(f"Graph with n = r reduced to {[k.value for k in non_circles]}")
        return SymbolicValue.of_scalar(circle**signature.components)

    if len(non_circles) != 1 or non_circles[0] == TerminalKind.VANISHING:
        raise CrossCheckError(
            f"Graph with n = r + 1 reduced to {[k.value for k in signature.terminals]}"
        )
    form = TerminalForm(non_circles[0], circle_count=signature.components)
    return terminal_value(form.kind, g).scale(circle ** (form.circle_count - 1))


def graph_memo_info() -> str:
    """Hit/miss statistics of the graph memo, for debug logging."""
    return f"signatures {_cached_signature.cache_info()}, values {_signature_value.cache_info()}"


def check_contraction_order(graph: IntersectionGraph, rng: random.Random, trials: int = 8) -> None:
    """
    Reduce a graph in several random orders and compare with the default order.

    Raises:
        CrossCheckError: If any order yields a different signature
    """
    reference = _build_signature(graph, None)
    for trial in range(trials):
        candidate = _build_signature(graph, rng)
        if candidate != reference:
            raise CrossCheckError(
                f"Contraction order changed the reduced graph on trial {trial}: "
                f"{_kinds(candidate)} != {_kinds(reference)}"
            )
    logger.debug(f"Contraction order check passed over {trials} random orders")


def _kinds(signature: GraphSignature) -> List[str]:
    return [kind.value for kind in signature.terminals]
