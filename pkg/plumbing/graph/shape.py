import enum
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from plumbing.errors import InfiniteWeight, NoSuchVertex, NotAComb
from plumbing.graph.plumbing_graph import PlumbingGraph
from plumbing.group.intalg import IntMatrix, signature

logger = logging.getLogger("plumbing.shape")


class ShapeKind(enum.Enum):
    LINEAR_TREE = "linear_tree"
    COMB = "comb"
    GENERAL_TREE = "general_tree"
    HAS_CYCLES = "has_cycles"


@dataclass(frozen=True)
class GraphShape:
    kind: ShapeKind
    valency: Dict[int, int]
    rim: Optional[int] = None

    def json(self) -> dict:
        return {"kind": self.kind.value, "rim": self.rim}


def classify_shape(g: PlumbingGraph) -> GraphShape:
    valency = {v: g.valency(v) for v in g.vertex_ids}
    if g.betti_number() > 0:
        return GraphShape(ShapeKind.HAS_CYCLES, valency)
    branch = [v for v, k in valency.items() if k >= 3]
    if not branch:
        return GraphShape(ShapeKind.LINEAR_TREE, valency)
    if len(branch) == 1:
        return GraphShape(ShapeKind.COMB, valency, rim=branch[0])
    return GraphShape(ShapeKind.GENERAL_TREE, valency)


def linear_order(g: PlumbingGraph) -> List[int]:
    """Vertices of a linear tree from the end with the smaller id."""
    if len(g) == 1:
        return g.vertex_ids
    ends = sorted(v for v in g.vertex_ids if g.valency(v) == 1)
    assert len(ends) == 2, f"{g} is not a linear tree"
    order, previous = [ends[0]], None
    while len(order) < len(g):
        forward = [u for u in g.neighbors(order[-1]) if u != previous]
        previous = order[-1]
        order.append(forward[0])
    return order


def string_decomposition(g: PlumbingGraph, rim: int) -> List[List[int]]:
    """Strings hanging off the rim of a comb, each listed far end first.

    Strings are ordered by the id of their vertex adjacent to the rim.
    """
    shape = classify_shape(g)
    if shape.kind != ShapeKind.COMB or shape.rim != rim:
        raise NotAComb(f"{g} is not a comb with rim {rim}")
    strings = []
    for start in g.neighbors(rim):
        string, previous = [start], rim
        while True:
            forward = [u for u in g.neighbors(string[-1]) if u != previous]
            if not forward:
                break
            previous = string[-1]
            string.append(forward[0])
        strings.append(string[::-1])
    return strings


def intersection_matrix(g: PlumbingGraph) -> IntMatrix:
    """Intersection matrix with rows and columns in increasing vertex id."""
    ids = g.vertex_ids
    position = {v: k for k, v in enumerate(ids)}
    rows = [[0] * len(ids) for _ in ids]
    for v in g.vertices:
        if v.is_infinite:
            raise InfiniteWeight(v.id, "the intersection matrix")
        rows[position[v.id]][position[v.id]] = v.self_int
    for i, j in g.edges:
        rows[position[i]][position[j]] += 1
        rows[position[j]][position[i]] += 1
    return IntMatrix.from_rows(rows, cols=len(ids))


def positivity_index(g: PlumbingGraph) -> int:
    return signature(intersection_matrix(g))[0]


def index_theorem_ok(g: PlumbingGraph) -> bool:
    """A divisor on a compact surface has positivity index at most one."""
    return positivity_index(g) <= 1


def is_nef_vertex(g: PlumbingGraph, vertex_id: int) -> bool:
    v = g.vertex(vertex_id)
    return v.genus >= 1 or v.is_infinite or v.self_int <= -2


def nef_on_genus_zero(g: PlumbingGraph) -> Dict[int, bool]:
    return {v: is_nef_vertex(g, v) for v in g.vertex_ids}


def is_contractible(g: PlumbingGraph, vertex_id: int) -> Tuple[bool, str]:
    """Whether a vertex is a rational (-1)-curve meeting at most two others once each."""
    if vertex_id not in g:
        raise NoSuchVertex(vertex_id)
    v = g.vertex(vertex_id)
    if v.genus != 0:
        return False, f"genus {v.genus}"
    if v.is_infinite or v.self_int != -1:
        return False, f"self-intersection {v.self_int}"
    if g.valency(vertex_id) > 2:
        return False, f"valency {g.valency(vertex_id)}"
    if any(g.edge_multiplicity(vertex_id, u) > 1 for u in g.neighbors(vertex_id)):
        return False, "meets a neighbour in more than one point"
    return True, ""


def is_minimal_gnc(g: PlumbingGraph) -> Tuple[bool, List[int]]:
    violating = [v for v in g.vertex_ids if is_contractible(g, v)[0]]
    return not violating, violating
