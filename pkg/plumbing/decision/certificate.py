"""Certificates of infinite order built from removals.

Removing curves kills their loops; if every remaining component has a loop
of infinite order that survives in the free product of the components, all
loops of the original graph have infinite order.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from plumbing.analysis.comb import classify, comb_params_from_graph
from plumbing.errors import PlumbingError
from plumbing.graph.plumbing_graph import PlumbingGraph
from plumbing.graph.shape import ShapeKind, classify_shape

logger = logging.getLogger("plumbing.decision")


def is_elementary_infinite(g: PlumbingGraph) -> Tuple[bool, str]:
    """Whether a tree is a linear tree or comb whose loops all have infinite order.

    Returns the answer and a short reason.
    """
    if not g.is_tree():
        return False, "not a tree"
    shape = classify_shape(g)
    positive = [v.id for v in g.vertices if v.genus >= 1]
    if shape.kind == ShapeKind.LINEAR_TREE:
        if positive:
            return True, f"linear tree with curves of positive genus {positive}"
        return False, "linear tree of rational curves"
    if shape.kind != ShapeKind.COMB:
        return False, f"{shape.kind.value} is neither linear nor a comb"
    if positive:
        return True, f"comb with curves of positive genus {positive}"
    try:
        params = comb_params_from_graph(g, shape.rim)
    except PlumbingError as error:
        return False, str(error)
    comb = classify(params)
    if comb.gamma_status.is_infinite:
        return True, f"comb {params} with rim loop of infinite order"
    return False, f"comb {params} with rim loop {comb.gamma_status}"


def certificate_pieces(g: PlumbingGraph, removed: Iterable[int]) -> List[Tuple[List[int], bool, str]]:
    """Components left after the removals, each with its elementary-infinite check."""
    removed = set(removed)
    rest = g.subgraph(v for v in g.vertex_ids if v not in removed)
    return [(c, *is_elementary_infinite(rest.subgraph(c))) for c in rest.components()]


class SearchLimitReached(Exception):
    pass


class CertificateSearch:
    """Backtracking over removals of curves meeting at least two others.

    Candidates are tried by decreasing valency in the remaining graph, ties
    broken by smallest id; failures are memoized per remaining vertex set.
    """

    def __init__(self, g: PlumbingGraph, max_states: int = 20000) -> None:
        self.g = g
        self.max_states = max_states
        self.states = 0
        self._memo: Dict[FrozenSet[int], Optional[Tuple[int, ...]]] = {}

    def _search(self, remaining: FrozenSet[int]) -> Optional[Tuple[int, ...]]:
        if remaining in self._memo:
            return self._memo[remaining]
        self.states += 1
        if self.states > self.max_states:
            raise SearchLimitReached()
        sub = self.g.subgraph(remaining)
        if all(is_elementary_infinite(sub.subgraph(c))[0] for c in sub.components()):
            found = ()
        else:
            found = None
            for v in sorted(remaining, key=lambda x: (-sub.valency(x), x)):
                if sub.valency(v) < 2:
                    break
                rest = self._search(remaining - {v})
                if rest is not None:
                    found = (v,) + rest
                    break
        self._memo[remaining] = found
        return found

    def run(self) -> Optional[Tuple[int, ...]]:
        try:
            found = self._search(frozenset(self.g.vertex_ids))
        except SearchLimitReached:
            logger.warning(f"Certificate search stopped after {self.max_states} vertex sets")
            return None
        logger.info(f"Certificate search visited {self.states} vertex sets, removals {found}")
        return found


def find_certificate(g: PlumbingGraph, max_states: int = 20000) -> Optional[Tuple[int, ...]]:
    return CertificateSearch(g, max_states).run()


def valency_two_removals(g: PlumbingGraph, removed: Iterable[int]) -> List[int]:
    """Removed curves that met exactly two others at the time of their removal."""
    state, result = set(g.vertex_ids), []
    for v in removed:
        if g.subgraph(state).valency(v) == 2:
            result.append(v)
        state.discard(v)
    return result
