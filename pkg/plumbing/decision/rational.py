import logging
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from plumbing.analysis.chain import chain_sequence
from plumbing.analysis.comb import classify, comb_params_from_graph
from plumbing.analysis.orders import Order, TraceStep
from plumbing.decision.decompose import decompose_at
from plumbing.decision.verdicts import NONTRIVIAL, GammaVerdict, merge
from plumbing.errors import PlumbingError
from plumbing.graph.plumbing_graph import PlumbingGraph
from plumbing.graph.shape import ShapeKind, classify_shape, linear_order, string_decomposition
from plumbing.group.presentation import replace_elliptic, simplify_genus

logger = logging.getLogger("plumbing.decision")

Verdicts = Dict[int, GammaVerdict]


def reduce_to_rational(g: PlumbingGraph) -> Tuple[PlumbingGraph, List[TraceStep]]:
    """Rewrite into a graph of rational curves with finite weights.

    Curves of higher genus become elliptic, elliptic curves become rational
    with weight ``-max(2, m)`` and infinite weights become ``-2``. Each
    rewrite maps the group onto the new one compatibly with the loops, so
    verdicts come back through :meth:`GammaVerdict.lifted`.
    """
    steps = []
    higher = [v.id for v in g.vertices if v.genus >= 2]
    if higher:
        g = simplify_genus(g)
        steps.append(TraceStep("genus_simplification", {"vertices": higher}))
    for v in g.vertices:
        if v.genus == 1:
            n = 2 if v.is_infinite else max(2, v.m)
            g = replace_elliptic(g, v.id, n)
            steps.append(TraceStep("elliptic_replacement", {"vertex": v.id, "self_int": -n}))
    for v in g.vertices:
        if v.is_infinite:
            g = g.with_vertex(v.id, self_int=-2)
            steps.append(TraceStep("infinite_weight_relaxation", {"vertex": v.id, "self_int": -2}))
    return g, steps


class RationalTreeAnalysis:
    """Verdicts on a tree of rational curves with finite weights.

    Linear trees and combs are solved directly. Any other vertex is reached
    by removing a curve of valency at least three: the component holding
    the vertex injects into the quotient by that curve's loop as soon as
    every boundary loop is nontrivial. All admissible removals are tried and
    their outcomes merged. Results are memoized per vertex set.
    """

    def __init__(self, g: PlumbingGraph) -> None:
        assert g.is_tree()
        self.g = g
        self._memo: Dict[FrozenSet[int], Verdicts] = {}

    def verdicts(self, vertex_ids: Optional[Iterable[int]] = None) -> Verdicts:
        key = frozenset(self.g.vertex_ids if vertex_ids is None else vertex_ids)
        if key not in self._memo:
            sub = self.g.subgraph(key)
            shape = classify_shape(sub)
            if shape.kind == ShapeKind.LINEAR_TREE:
                result = self._chain(sub)
            elif shape.kind == ShapeKind.COMB:
                result = self._comb(sub, shape.rim)
            else:
                branch = sorted(
                    (v for v, k in shape.valency.items() if k >= 3),
                    key=lambda v: (-shape.valency[v], v),
                )
                result = {
                    v: self._through_removal(sub, v, [j for j in branch if j != v])
                    for v in sub.vertex_ids
                }
            self._memo[key] = result
        return self._memo[key]

    def _chain(self, sub: PlumbingGraph) -> Verdicts:
        order = linear_order(sub)
        weights = [sub.vertex(v).m for v in order]
        data = chain_sequence(weights)
        return {
            v: GammaVerdict.from_order(
                v,
                data.gamma_order(k),
                [TraceStep("chain_recurrence", {"weights": weights, "a": list(data.a), "position": k})],
            )
            for k, v in enumerate(order, start=1)
        }

    def _comb(self, sub: PlumbingGraph, rim: int) -> Verdicts:
        try:
            params = comb_params_from_graph(sub, rim)
        except PlumbingError as error:
            logger.debug(f"Comb with rim {rim} is outside the classifier: {error}")
            params = None

        if params is None:
            result = {
                v: self._through_removal(sub, v, [rim])
                for v in sub.vertex_ids
                if v != rim
            }
            result[rim] = GammaVerdict.unknown(rim, TraceStep("unclassified_rim", {"rim": rim}))
            return result

        comb = classify(params)
        rim_verdict = GammaVerdict.from_order(
            rim, comb.gamma_status, (TraceStep("rim_classification", {"params": str(params)}),) + comb.trace
        )
        result = {rim: rim_verdict}
        for h, string in enumerate(string_decomposition(sub, rim)):
            a = chain_sequence([sub.vertex(v).m for v in string]).a
            for k, v in enumerate(string, start=1):
                if comb.gamma_status.is_infinite:
                    # the rim loop is a power of every string loop
                    result[v] = rim_verdict.with_steps(
                        TraceStep("string_power_of_rim", {"string": string, "position": k})
                    )
                elif comb.string_orders is not None:
                    beta = comb.string_orders[h].value
                    result[v] = GammaVerdict.from_order(
                        v,
                        Order.finite(beta // gcd(beta, a[k - 1])),
                        rim_verdict.trace
                        + (TraceStep("string_loop_order", {"string": string, "position": k, "far_end_order": beta}),),
                    )
                else:
                    result[v] = self._through_removal(sub, v, [rim])
        return result

    def _through_removal(self, sub: PlumbingGraph, v: int, candidates: List[int]) -> GammaVerdict:
        verdict = GammaVerdict.unknown(v)
        for j in candidates:
            decomposition = decompose_at(sub, j)
            boundary = [
                self.verdicts(c.vertex_ids)[b] for c, b in zip(decomposition.components, decomposition.boundary)
            ]
            if not all(b.status in NONTRIVIAL for b in boundary):
                logger.debug(f"Removing {j} leaves a boundary loop not known to be nontrivial")
                continue
            component = decomposition.components[decomposition.component_index(v)]
            step = TraceStep("component_injection", {"removed": j, "component": component.vertex_ids})
            verdict = merge(verdict, self.verdicts(component.vertex_ids)[v].lifted(step))
        return verdict
