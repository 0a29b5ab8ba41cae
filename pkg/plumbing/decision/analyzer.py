import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import pandas
from tqdm import tqdm

from plumbing.analysis.orders import Order, OrderKind
from plumbing.decision.engines import TheoremEngine, get_theorem_class
from plumbing.decision.verdicts import GammaVerdict, Status
from plumbing.errors import HypothesisViolated, InfiniteWeight, NotATree
from plumbing.graph.plumbing_graph import PlumbingGraph
from plumbing.graph.shape import classify_shape, index_theorem_ok, is_minimal_gnc, nef_on_genus_zero, positivity_index
from plumbing.group.presentation import build_presentation
from plumbing.group.words import Word
from plumbing.oracle.coset_table import TableStatus
from plumbing.oracle.enumeration import EnumLimits, coset_table, element_order, word_letters

logger = logging.getLogger("plumbing.analyzer")


def agrees(verdict: GammaVerdict, oracle: Order) -> Optional[bool]:
    """Whether a verdict is consistent with the oracle's answer; ``None`` when nothing can be said."""
    if verdict.status == Status.UNKNOWN or oracle.kind in (OrderKind.EXHAUSTED, OrderKind.UNKNOWN):
        return None
    if oracle.is_finite:
        k = oracle.value
        if verdict.status == Status.FINITE:
            return verdict.order == k
        if verdict.status == Status.TRIVIAL:
            return k == 1
        if verdict.status == Status.INFINITE:
            return False
        return k >= 2 and k % (verdict.order_multiple_of or 1) == 0
    if oracle.kind == OrderKind.AT_LEAST:
        if verdict.status == Status.FINITE:
            return verdict.order >= oracle.value and verdict.order % (oracle.multiple_of or 1) == 0
        return verdict.status != Status.TRIVIAL
    return None


@dataclass
class OracleCheck:
    group_order: Order
    orders: Dict[int, Order]
    agreement: Dict[int, Optional[bool]]

    def json(self) -> dict:
        return {
            "group_order": self.group_order.json(),
            "vertices": [
                {"vertex": v, "order": self.orders[v].json(), "agrees": self.agreement[v]}
                for v in sorted(self.orders)
            ],
        }


@dataclass
class Report:
    """Everything ``plumb analyze`` knows about one graph.

    ``json()`` keeps a fixed field order so reports can be diffed.
    """

    graph: PlumbingGraph
    theorem: str
    engine: Optional[str] = None
    verdicts: Dict[int, GammaVerdict] = field(default_factory=dict)
    error: Optional[Exception] = None
    presentation: Optional[str] = None
    oracle: Optional[OracleCheck] = None

    def hypotheses(self) -> dict:
        nef = nef_on_genus_zero(self.graph)
        minimal, contractible = is_minimal_gnc(self.graph)
        try:
            n_plus, index_ok = positivity_index(self.graph), index_theorem_ok(self.graph)
        except InfiniteWeight:
            n_plus, index_ok = None, None
        return {
            "nef": {str(v): ok for v, ok in nef.items()},
            "all_nef": all(nef.values()),
            "minimal": minimal,
            "contractible": contractible,
            "positivity_index": n_plus,
            "index_theorem_ok": index_ok,
        }

    def json(self) -> dict:
        g = self.graph
        record = {
            "graph": {
                "vertices": len(g),
                "edges": len(g.edges),
                "betti_number": g.betti_number(),
                "is_tree": g.is_tree(),
            },
            "shape": classify_shape(g).json(),
            "hypotheses": self.hypotheses(),
            "theorem": self.theorem,
            "engine": self.engine,
            "error": None,
            "verdicts": [self.verdicts[v].json() for v in sorted(self.verdicts)],
        }
        if self.error is not None:
            record["error"] = {
                "type": type(self.error).__name__,
                "message": str(self.error),
                "vertices": list(getattr(self.error, "vertices", [])),
            }
        if self.presentation is not None:
            record["presentation"] = self.presentation
        if self.oracle is not None:
            record["oracle"] = self.oracle.json()
        return record

    @property
    def results(self) -> pandas.DataFrame:
        rows = []
        for v in self.graph.vertices:
            verdict = self.verdicts.get(v.id)
            row = {
                "vertex": v.id,
                "genus": v.genus,
                "self_int": "inf" if v.is_infinite else v.self_int,
                "nef": nef_on_genus_zero(self.graph)[v.id],
                "verdict": str(verdict) if verdict else "-",
            }
            if self.oracle is not None:
                row["oracle"] = str(self.oracle.orders[v.id])
                row["agrees"] = self.oracle.agreement[v.id]
            rows.append(row)
        return pandas.DataFrame(rows)

    def dump(self, pretty: bool = False) -> None:
        if not pretty:
            print(json.dumps(self.json(), indent=2))
            return
        shape = classify_shape(self.graph)
        print(f"shape: {shape.kind.value}" + (f" (rim {shape.rim})" if shape.rim is not None else ""))
        print(f"engine: {self.engine or self.theorem}")
        if self.error is not None:
            print(f"error: {type(self.error).__name__}: {self.error}")
        if self.oracle is not None:
            print(f"oracle group order: {self.oracle.group_order}")
        print(self.results.to_string(index=False))
        if self.presentation is not None:
            print(self.presentation)


class Analyzer:
    """
    Runs a theorem engine on a graph and, on request, checks its verdicts with coset enumeration.

    Analyzer related command line arguments:

    .. argparse::
        :ref: plumbing.options.add_analyze_args
        :passparser:
        :prog:
    """

    def __init__(
        self,
        engine: TheoremEngine,
        limits: EnumLimits = EnumLimits(),
        oracle: bool = False,
        show_presentation: bool = False,
        progress_bar: bool = False,
    ) -> None:
        self.engine = engine
        self.limits = limits
        self.oracle = oracle
        self.show_presentation = show_presentation
        self.progress_bar = progress_bar

    def check(self, g: PlumbingGraph, verdicts: Dict[int, GammaVerdict]) -> OracleCheck:
        p = build_presentation(g)
        logger.info(f"Oracle check with at most {self.limits.max_cosets} cosets")
        table = coset_table(p, self.limits)
        if table.status == TableStatus.COMPLETE:
            group = Order.finite(table.index)
        else:
            group = Order.exhausted(table.high_water)
        logger.info(f"Oracle group order: {group}")

        vertices = g.vertex_ids
        if table.status != TableStatus.COMPLETE and self.progress_bar:
            vertices = tqdm(vertices)
        orders = {}
        for v in vertices:
            w = Word.of(p.gamma(v))
            if table.status == TableStatus.COMPLETE:
                orders[v] = Order.finite(table.orbit_length(word_letters(p, w)))
            else:
                orders[v] = element_order(p, w, self.limits, table)
        agreement = {}
        for v, order in orders.items():
            verdict = verdicts.get(v, GammaVerdict.unknown(v))
            agreement[v] = agrees(verdict, order)
            if agreement[v] is False:
                logger.warning(f"Vertex {v}: verdict {verdict} disagrees with oracle order {order}")
        return OracleCheck(group, orders, agreement)

    def __call__(self, g: PlumbingGraph) -> Report:
        report = Report(g, self.engine.name)
        try:
            result = self.engine(g)
            report.engine, report.verdicts = result.theorem, result.verdicts
        except (HypothesisViolated, NotATree) as error:
            logger.info(f"{type(error).__name__}: {error}")
            report.error = error
        if self.show_presentation:
            report.presentation = build_presentation(g).export_text()
        if self.oracle:
            report.oracle = self.check(g, report.verdicts)
        return report

    @classmethod
    def from_args(cls, args):
        engine = get_theorem_class(args.theorem).from_args(args)
        limits = EnumLimits(args.max_cosets, args.max_time, args.max_power)
        return cls(
            engine,
            limits,
            oracle=args.oracle == "check",
            show_presentation=args.show_presentation,
            progress_bar=not args.no_progress_bar,
        )
