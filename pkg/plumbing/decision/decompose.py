from dataclasses import dataclass
from typing import Tuple

from plumbing.errors import NotATree, ValencyTooLow
from plumbing.graph.plumbing_graph import PlumbingGraph


@dataclass(frozen=True)
class Decomposition:
    """The pieces left after removing one curve from a tree.

    Killing the loop of the removed curve turns the group into the free
    product of the component groups modulo the single relation that the
    product of the boundary loops is trivial.
    """

    removed: int
    components: Tuple[PlumbingGraph, ...]
    boundary: Tuple[int, ...]

    def component_index(self, vertex_id: int) -> int:
        for k, component in enumerate(self.components):
            if vertex_id in component:
                return k
        raise ValueError(f"Vertex {vertex_id} is not in any component of {self}")


def split_at(g: PlumbingGraph, j: int) -> Decomposition:
    if not g.is_tree():
        raise NotATree(g.betti_number())
    rest = g.subgraph(v for v in g.vertex_ids if v != j)
    pieces = []
    for boundary in g.neighbors(j):
        component = next(c for c in rest.components() if boundary in c)
        pieces.append((boundary, rest.subgraph(component)))
    pieces.sort(key=lambda piece: piece[0])
    return Decomposition(j, tuple(c for _, c in pieces), tuple(b for b, _ in pieces))


def decompose_at(g: PlumbingGraph, j: int) -> Decomposition:
    if not g.is_tree():
        raise NotATree(g.betti_number())
    valency = g.valency(j)
    if valency < 3:
        raise ValencyTooLow(j, valency)
    return split_at(g, j)
