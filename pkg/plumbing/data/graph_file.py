"""Graph files.

A graph file is a YAML (or JSON) document::

    vertices:
      - {id: 1, genus: 0, self_int: -2}
      - {id: 2, genus: 0, self_int: inf}
    edges:
      - [1, 2]

``genus`` defaults to 0. Errors point at the offending line and column.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import yaml

from plumbing.errors import (
    DanglingEdge,
    DuplicateId,
    GraphFileError,
    GraphValidationError,
    SelfLoop,
)
from plumbing.graph.plumbing_graph import INF, PlumbingGraph, SelfInt, Vertex, validate

logger = logging.getLogger("plumbing.data")

Mark = Tuple[int, int]


def _mark(node: yaml.Node) -> Mark:
    return node.start_mark.line + 1, node.start_mark.column + 1


def _fail(message: str, node: Optional[yaml.Node] = None):
    if node is None:
        raise GraphFileError(message)
    raise GraphFileError(message, *_mark(node))


def _field(node: yaml.MappingNode, key: str) -> Optional[yaml.Node]:
    for key_node, value_node in node.value:
        if isinstance(key_node, yaml.ScalarNode) and key_node.value == key:
            return value_node
    return None


def _integer(loader: yaml.SafeLoader, node: yaml.Node, what: str) -> int:
    value = loader.construct_object(node, deep=True) if isinstance(node, yaml.ScalarNode) else None
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(f"{what} must be an integer", node)
    return value


def _self_int(loader: yaml.SafeLoader, node: yaml.Node) -> SelfInt:
    if isinstance(node, yaml.ScalarNode) and node.value.lower() == "inf":
        return INF
    return _integer(loader, node, "self_int")


class GraphFile:
    """A parsed graph file, remembering where each vertex and edge was written."""

    def __init__(
        self,
        graph: PlumbingGraph,
        source: str = "<text>",
        vertex_marks: Optional[Dict[int, Mark]] = None,
        edge_marks: Optional[List[Tuple[Tuple[int, int], Mark]]] = None,
    ) -> None:
        self.graph = graph
        self.source = source
        self.vertex_marks = vertex_marks or {}
        self.edge_marks = edge_marks or []

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> "GraphFile":
        loader = yaml.SafeLoader(text)
        try:
            root = loader.get_single_node()
            return cls._from_node(loader, root, source)
        except yaml.MarkedYAMLError as error:
            mark = error.problem_mark or error.context_mark
            problem = error.problem or error.context or "malformed document"
            if mark is None:
                raise GraphFileError(problem) from error
            raise GraphFileError(problem, mark.line + 1, mark.column + 1) from error
        except yaml.YAMLError as error:
            raise GraphFileError(str(error)) from error
        finally:
            loader.dispose()

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> "GraphFile":
        path = Path(path)
        logger.debug(f"Reading graph file {path}")
        with open(path) as f:
            text = f.read()
        try:
            return cls.from_text(text, str(path))
        except GraphFileError as error:
            logger.error(f"{path}: {error}")
            raise

    @classmethod
    def _from_node(cls, loader: yaml.SafeLoader, root: Optional[yaml.Node], source: str) -> "GraphFile":
        if not isinstance(root, yaml.MappingNode):
            _fail("a graph file is a mapping with 'vertices' and 'edges'", root)
        vertices_node = _field(root, "vertices")
        if not isinstance(vertices_node, yaml.SequenceNode):
            _fail("'vertices' must be a list", vertices_node or root)
        edges_node = _field(root, "edges")
        if edges_node is not None and not isinstance(edges_node, yaml.SequenceNode):
            _fail("'edges' must be a list", edges_node)

        vertices, vertex_marks = [], {}
        for node in vertices_node.value:
            if not isinstance(node, yaml.MappingNode):
                _fail("a vertex is a mapping with id, genus and self_int", node)
            id_node, genus_node, self_int_node = (_field(node, key) for key in ("id", "genus", "self_int"))
            if id_node is None:
                _fail("vertex without 'id'", node)
            if self_int_node is None:
                _fail("vertex without 'self_int'", node)
            vertex_id = _integer(loader, id_node, "id")
            genus = 0 if genus_node is None else _integer(loader, genus_node, "genus")
            vertices.append(Vertex(vertex_id, genus, _self_int(loader, self_int_node)))
            if vertex_id in vertex_marks:
                raise GraphFileError(str(DuplicateId(vertex_id)), *_mark(id_node))
            if genus < 0:
                raise GraphFileError(f"Vertex {vertex_id} has negative genus {genus}", *_mark(genus_node))
            vertex_marks[vertex_id] = _mark(node)

        edges, edge_marks = [], []
        for node in edges_node.value if edges_node is not None else []:
            if not isinstance(node, yaml.SequenceNode) or len(node.value) != 2:
                _fail("an edge is a pair of vertex ids", node)
            edge = tuple(_integer(loader, end, "edge endpoint") for end in node.value)
            edges.append(edge)
            edge_marks.append((tuple(sorted(edge)), _mark(node)))

        graph_file = cls(PlumbingGraph.build(vertices, edges), source, vertex_marks, edge_marks)
        graph_file.validate(vertices_node)
        return graph_file

    def _edge_mark(self, edge) -> Optional[Mark]:
        return next((mark for e, mark in self.edge_marks if e == tuple(sorted(edge))), None)

    def validate(self, vertices_node: Optional[yaml.Node] = None) -> None:
        try:
            validate(self.graph)
        except (DanglingEdge, SelfLoop) as error:
            mark = self._edge_mark(error.edge if isinstance(error, DanglingEdge) else (error.vertex_id,) * 2)
            raise GraphFileError(str(error), *(mark or (None, None))) from error
        except GraphValidationError as error:
            mark = _mark(vertices_node) if vertices_node is not None else (None, None)
            raise GraphFileError(str(error), *mark) from error

    @staticmethod
    def to_text(graph: PlumbingGraph) -> str:
        """Canonical text of a graph: one flow mapping per vertex, one pair per edge."""
        return yaml.safe_dump(graph.json(), sort_keys=False, default_flow_style=None)

    def __str__(self) -> str:
        return self.to_text(self.graph)


def load_graph(path: Union[str, Path]) -> PlumbingGraph:
    return GraphFile.from_path(path).graph
