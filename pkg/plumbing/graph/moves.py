import enum
import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from plumbing.errors import (
    InfiniteWeight,
    InvalidMove,
    MultiEdgeCreated,
    NotATree,
    NotContractible,
)
from plumbing.graph.plumbing_graph import Edge, PlumbingGraph, Vertex
from plumbing.graph.shape import is_contractible

logger = logging.getLogger("plumbing.moves")


class MoveKind(enum.Enum):
    BLOW_UP_EDGE = "blowup-edge"
    BLOW_UP_POINT = "blowup-point"
    BLOW_DOWN = "blowdown"


@dataclass(frozen=True)
class MoveRecord:
    """One move. ``vertex`` is the created vertex for blow-ups and the removed one for blow-downs."""

    kind: MoveKind
    vertex: int
    edge: Optional[Edge] = None
    base: Optional[int] = None
    multi_edge: bool = False

    def json(self) -> dict:
        record = {"kind": self.kind.value, "vertex": self.vertex}
        if self.edge is not None:
            record["edge"] = list(self.edge)
        if self.base is not None:
            record["base"] = self.base
        if self.multi_edge:
            record["multi_edge"] = True
        return record


def _shift(g: PlumbingGraph, vertex_id: int, delta: int, operation: str) -> PlumbingGraph:
    v = g.vertex(vertex_id)
    if v.is_infinite:
        raise InfiniteWeight(vertex_id, operation)
    return g.with_vertex(vertex_id, self_int=v.self_int + delta)


def blow_up_edge(g: PlumbingGraph, e: Sequence[int]) -> Tuple[PlumbingGraph, MoveRecord]:
    i, j = sorted(e)
    rest = g.without_edge((i, j))
    new_id = g.next_id()
    for endpoint in (i, j):
        rest = _shift(rest, endpoint, -1, "blowing up")
    result = PlumbingGraph(
        rest.vertices + (Vertex(new_id, 0, -1),),
        rest.edges + ((i, new_id), (j, new_id)),
    )
    logger.debug(f"Blew up edge {(i, j)} into vertex {new_id}")
    return result, MoveRecord(MoveKind.BLOW_UP_EDGE, new_id, edge=(i, j))


def blow_up_point(g: PlumbingGraph, v: int) -> Tuple[PlumbingGraph, MoveRecord]:
    shifted = _shift(g, v, -1, "blowing up")
    new_id = g.next_id()
    result = PlumbingGraph(
        shifted.vertices + (Vertex(new_id, 0, -1),),
        shifted.edges + ((v, new_id),),
    )
    logger.debug(f"Blew up a smooth point of {v} into vertex {new_id}")
    return result, MoveRecord(MoveKind.BLOW_UP_POINT, new_id, base=v)


def blow_down(g: PlumbingGraph, v: int) -> Tuple[PlumbingGraph, MoveRecord]:
    ok, reason = is_contractible(g, v)
    if not ok:
        raise NotContractible(v, reason)
    if len(g) == 1:
        raise NotContractible(v, "it is the whole divisor")

    neighbors = g.neighbors(v)
    multi_edge = len(neighbors) == 2 and g.edge_multiplicity(*neighbors) > 0
    result = PlumbingGraph(
        tuple(u for u in g.vertices if u.id != v),
        tuple(e for e in g.edges if v not in e) + ((tuple(neighbors),) if len(neighbors) == 2 else ()),
    )
    for u in neighbors:
        result = _shift(result, u, 1, "blowing down")
    logger.debug(f"Blew down vertex {v}")
    return result, MoveRecord(MoveKind.BLOW_DOWN, v, multi_edge=multi_edge)


def contractible_vertices(g: PlumbingGraph) -> List[int]:
    if len(g) == 1:
        return []
    return [v for v in g.vertex_ids if is_contractible(g, v)[0]]


def full_blow_down(
    g: PlumbingGraph, rng: Optional[random.Random] = None
) -> Tuple[PlumbingGraph, List[MoveRecord]]:
    """Blow down rational (-1)-curves until none is left.

    The smallest eligible id goes first, unless ``rng`` is given, in which
    case the next vertex is drawn at random among the eligible ones.
    """
    if not g.is_tree():
        raise NotATree(g.betti_number())
    records = []
    while True:
        eligible = contractible_vertices(g)
        if not eligible:
            break
        v = rng.choice(eligible) if rng is not None else eligible[0]
        neighbors = g.neighbors(v)
        if len(neighbors) == 2 and g.edge_multiplicity(*neighbors) > 0:
            raise MultiEdgeCreated(v, neighbors)
        g, record = blow_down(g, v)
        records.append(record)
    if records:
        logger.info(f"Full blow-down removed {len(records)} vertices: {[r.vertex for r in records]}")
    return g, records


def replay(g: PlumbingGraph, records: Sequence[MoveRecord]) -> PlumbingGraph:
    for record in records:
        if record.kind == MoveKind.BLOW_UP_EDGE:
            g, again = blow_up_edge(g, record.edge)
        elif record.kind == MoveKind.BLOW_UP_POINT:
            g, again = blow_up_point(g, record.base)
        else:
            g, again = blow_down(g, record.vertex)
        if again.vertex != record.vertex:
            raise InvalidMove(f"Replaying {record} created vertex {again.vertex}")
    return g


def parse_move_spec(tokens: Sequence[str]) -> Tuple[str, Tuple[int, ...]]:
    """Parse ``blowup-edge I J``, ``blowup-point V``, ``blowdown V`` or ``full-blowdown``."""
    arity = {
        MoveKind.BLOW_UP_EDGE.value: 2,
        MoveKind.BLOW_UP_POINT.value: 1,
        MoveKind.BLOW_DOWN.value: 1,
        "full-blowdown": 0,
    }
    if not tokens or tokens[0] not in arity:
        raise InvalidMove(f"Unknown move {' '.join(tokens)!r}, expected one of {sorted(arity)}")
    name, arguments = tokens[0], tokens[1:]
    if len(arguments) != arity[name]:
        raise InvalidMove(f"{name} takes {arity[name]} vertex ids, got {len(arguments)}")
    try:
        return name, tuple(int(a) for a in arguments)
    except ValueError:
        raise InvalidMove(f"Vertex ids must be integers, got {list(arguments)}") from None


def apply_move_spec(
    g: PlumbingGraph, tokens: Sequence[str], rng: Optional[random.Random] = None
) -> Tuple[PlumbingGraph, List[MoveRecord]]:
    name, arguments = parse_move_spec(tokens)
    if name == "full-blowdown":
        return full_blow_down(g, rng)
    move = {
        MoveKind.BLOW_UP_EDGE.value: lambda: blow_up_edge(g, arguments),
        MoveKind.BLOW_UP_POINT.value: lambda: blow_up_point(g, arguments[0]),
        MoveKind.BLOW_DOWN.value: lambda: blow_down(g, arguments[0]),
    }[name]
    g, record = move()
    return g, [record]
