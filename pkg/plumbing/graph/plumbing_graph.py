import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from plumbing.errors import (
    DanglingEdge,
    Disconnected,
    DuplicateId,
    GraphValidationError,
    InfiniteWeight,
    NoSuchEdge,
    NoSuchVertex,
    SelfLoop,
)

logger = logging.getLogger("plumbing.graph")


class Weight(enum.Enum):
    """Symbolic self-intersection. ``INF`` drops the main relation of its vertex."""

    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Weight.INF

SelfInt = Union[int, Weight]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class Vertex:
    id: int
    genus: int = 0
    self_int: SelfInt = -2

    @property
    def is_infinite(self) -> bool:
        return self.self_int is INF

    @property
    def m(self) -> int:
        """The opposite of the self-intersection."""
        if self.is_infinite:
            raise InfiniteWeight(self.id)
        return -self.self_int

    def json(self) -> dict:
        return {
            "id": self.id,
            "genus": self.genus,
            "self_int": "inf" if self.is_infinite else self.self_int,
        }


def _normalize_edge(edge: Sequence[int]) -> Edge:
    i, j = edge
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted dual graph of a normal crossings divisor.

    Vertices are kept sorted by id and edges as sorted ``(min, max)`` pairs,
    repeated once per intersection point, so two graphs built from the same
    data compare equal. Construction does not validate; see :func:`validate`.
    """

    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()
    _index: Dict[int, Vertex] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.id)))
        object.__setattr__(self, "edges", tuple(sorted(_normalize_edge(e) for e in self.edges)))
        object.__setattr__(self, "_index", {v.id: v for v in self.vertices})

    @classmethod
    def build(
        cls,
        vertices: Iterable[Union[Vertex, Tuple[int, int, SelfInt]]],
        edges: Iterable[Sequence[int]] = (),
    ) -> "PlumbingGraph":
        """Build from vertices (or ``(id, genus, self_int)`` triples) and edge pairs."""
        vertex_list = [v if isinstance(v, Vertex) else Vertex(*v) for v in vertices]
        return cls(tuple(vertex_list), tuple(tuple(e) for e in edges))

    @classmethod
    def chain(cls, self_ints: Sequence[SelfInt], genera: Optional[Sequence[int]] = None) -> "PlumbingGraph":
        """Linear tree with ids 1..n in the given order."""
        genera = genera or [0] * len(self_ints)
        vertices = [Vertex(i + 1, g, s) for i, (g, s) in enumerate(zip(genera, self_ints))]
        edges = [(i, i + 1) for i in range(1, len(self_ints))]
        return cls.build(vertices, edges)

    @property
    def vertex_ids(self) -> List[int]:
        return [v.id for v in self.vertices]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex_id: int) -> bool:
        return vertex_id in self._index

    def vertex(self, vertex_id: int) -> Vertex:
        try:
            return self._index[vertex_id]
        except KeyError:
            raise NoSuchVertex(vertex_id) from None

    def incident_edges(self, vertex_id: int) -> List[Edge]:
        self.vertex(vertex_id)
        return [e for e in self.edges if vertex_id in e]

    def neighbors(self, vertex_id: int) -> List[int]:
        """Distinct neighbors, sorted by id."""
        return sorted({j if i == vertex_id else i for i, j in self.incident_edges(vertex_id)})

    def valency(self, vertex_id: int) -> int:
        """Number of intersection points on the curve, multi-edges counted."""
        return len(self.incident_edges(vertex_id))

    def edge_multiplicity(self, i: int, j: int) -> int:
        return self.edges.count(_normalize_edge((i, j)))

    def betti_number(self) -> int:
        components = nx.number_connected_components(self.to_networkx()) if self.vertices else 0
        return len(self.edges) - len(self.vertices) + components

    def is_tree(self) -> bool:
        return bool(self.vertices) and len(self.edges) == len(self.vertices) - 1 and self.is_connected()

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for v in self.vertices:
            graph.add_node(v.id, genus=v.genus, self_int=v.self_int)
        graph.add_edges_from(self.edges)
        return graph

    def components(self) -> List[List[int]]:
        return sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))

    def subgraph(self, vertex_ids: Iterable[int]) -> "PlumbingGraph":
        keep = set(vertex_ids)
        for v in keep:
            self.vertex(v)
        return PlumbingGraph(
            tuple(v for v in self.vertices if v.id in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def with_vertex(self, vertex_id: int, **changes) -> "PlumbingGraph":
        """Copy of the graph with the fields of one vertex replaced."""
        updated = replace(self.vertex(vertex_id), **changes)
        return PlumbingGraph(
            tuple(updated if v.id == vertex_id else v for v in self.vertices), self.edges
        )

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "PlumbingGraph":
        return PlumbingGraph(self.vertices, tuple(tuple(e) for e in edges))

    def without_edge(self, edge: Sequence[int]) -> "PlumbingGraph":
        """Remove a single copy of ``edge``."""
        edge = _normalize_edge(edge)
        edges = list(self.edges)
        try:
            edges.remove(edge)
        except ValueError:
            raise NoSuchEdge(edge) from None
        return PlumbingGraph(self.vertices, tuple(edges))

    def relabel(self, mapping: Mapping[int, int]) -> "PlumbingGraph":
        """Rename vertex ids; ids missing from ``mapping`` are kept."""
        return PlumbingGraph(
            tuple(replace(v, id=mapping.get(v.id, v.id)) for v in self.vertices),
            tuple((mapping.get(i, i), mapping.get(j, j)) for i, j in self.edges),
        )

    def next_id(self) -> int:
        return max(self.vertex_ids, default=0) + 1

    def json(self) -> dict:
        return {
            "vertices": [v.json() for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def __str__(self) -> str:
        weights = ", ".join(
            f"{v.id}:{'inf' if v.is_infinite else v.self_int}" + (f"(g{v.genus})" if v.genus else "")
            for v in self.vertices
        )
        return f"PlumbingGraph[{weights}; edges={list(self.edges)}]"


def validate(raw_graph: PlumbingGraph) -> PlumbingGraph:
    """Check the invariants of a plumbing graph and return it unchanged."""
    seen = set()
    for vertex_id in raw_graph.vertex_ids:
        if vertex_id in seen:
            raise DuplicateId(vertex_id)
        seen.add(vertex_id)

    for v in raw_graph.vertices:
        if v.genus < 0:
            raise GraphValidationError(f"Vertex {v.id} has negative genus {v.genus}")

    for edge in raw_graph.edges:
        for endpoint in edge:
            if endpoint not in raw_graph:
                raise DanglingEdge(edge, endpoint)
        if edge[0] == edge[1]:
            raise SelfLoop(edge[0])

    if not raw_graph.vertices:
        raise GraphValidationError("Graph has no vertices")

    components = raw_graph.components()
    if len(components) > 1:
        raise Disconnected(components)

    logger.debug(f"Validated {raw_graph}")
    return raw_graph
