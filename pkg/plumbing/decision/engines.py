import logging
from dataclasses import dataclass
from typing import Dict, List

from plumbing.analysis.orders import TraceStep
from plumbing.decision.certificate import certificate_pieces, find_certificate, valency_two_removals
from plumbing.decision.rational import RationalTreeAnalysis, Verdicts, reduce_to_rational
from plumbing.decision.verdicts import GammaVerdict, Status
from plumbing.errors import HypothesisViolated, NotATree, NotMinimal, PlumbingError
from plumbing.graph.moves import full_blow_down
from plumbing.graph.plumbing_graph import PlumbingGraph
from plumbing.graph.shape import is_minimal_gnc, nef_on_genus_zero

logger = logging.getLogger("plumbing.decision")

THEOREM_DICT = {}


def register_theorem(name):
    def register(cls):
        THEOREM_DICT[name] = cls
        cls.name = name
        return cls

    return register


def get_theorem_class(name):
    if name not in THEOREM_DICT:
        raise RuntimeError(f"No theorem engine called {name}")
    return THEOREM_DICT[name]


def _require_tree(g: PlumbingGraph) -> None:
    if not g.is_tree():
        raise NotATree(g.betti_number())


def _analyze(g: PlumbingGraph, theorem: str, hypothesis_steps: List[TraceStep]) -> Verdicts:
    reduced, steps = reduce_to_rational(g)
    verdicts = RationalTreeAnalysis(reduced).verdicts()
    result = {}
    for v, verdict in sorted(verdicts.items()):
        if steps:
            verdict = verdict.with_steps(*steps, before=True).lifted(TraceStep("reduction_transfer"))
        result[v] = verdict.with_steps(TraceStep(theorem), *hypothesis_steps, before=True)
    logger.info(f"{theorem}: " + ", ".join(f"{v}={verdict}" for v, verdict in result.items()))
    return result


def check_theorem_a(g: PlumbingGraph, theorem: str = "theorem_a") -> TraceStep:
    _require_tree(g)
    failing = [v for v, ok in nef_on_genus_zero(g).items() if not ok]
    if failing:
        raise HypothesisViolated(
            theorem,
            [f"rational vertex {v} has self-intersection {g.vertex(v).self_int} > -2" for v in failing],
            failing,
        )
    return TraceStep("nef_tree")


def theorem_a(g: PlumbingGraph) -> Verdicts:
    """Loops of a tree whose rational curves all have self-intersection at most -2.

    Every loop comes out nontrivial; linear trees and combs get exact orders
    where the classifier knows them.
    """
    step = check_theorem_a(g)
    return _analyze(g, "theorem_a", [step])


def check_theorem_b(g: PlumbingGraph) -> TraceStep:
    """Minimality, then either all rational weights at most -1 or nefness after blowing down."""
    _require_tree(g)
    minimal, violating = is_minimal_gnc(g)
    if not minimal:
        raise NotMinimal(violating)
    positive = [v.id for v in g.vertices if v.genus == 0 and not v.is_infinite and v.self_int >= 0]
    if not positive:
        return TraceStep("rational_weights_at_most_minus_one")

    reasons = [f"rational vertex {v} has self-intersection {g.vertex(v).self_int} >= 0" for v in positive]
    try:
        terminal, moves = full_blow_down(g)
    except PlumbingError as error:
        raise HypothesisViolated("theorem_b", reasons + [str(error)], positive) from error
    failing = [v for v, ok in nef_on_genus_zero(terminal).items() if not ok]
    if failing:
        raise HypothesisViolated(
            "theorem_b", reasons + [f"vertex {v} is not nef after blowing down" for v in failing], positive
        )
    return TraceStep("nef_after_blow_down", {"moves": moves})


def theorem_b(g: PlumbingGraph) -> Verdicts:
    """Loops of a minimal tree whose rational curves have self-intersection at most -1."""
    step = check_theorem_b(g)
    return _analyze(g, "theorem_b", [step])


def theorem_c(g: PlumbingGraph, max_states: int = 20000) -> Verdicts:
    """Infinite order of every loop, certified by removals down to elementary-infinite pieces.

    Without a certificate the verdicts of :func:`theorem_a` are returned.
    """
    step = check_theorem_a(g, "theorem_c")
    removed = find_certificate(g, max_states)
    if removed is None:
        return {
            v: verdict.with_steps(TraceStep("no_infinite_certificate"), before=True)
            for v, verdict in theorem_a(g).items()
        }

    pieces = [{"vertices": vertices, "reason": reason} for vertices, _, reason in certificate_pieces(g, removed)]
    steps = [
        TraceStep("theorem_c"),
        step,
        TraceStep("elementary_infinite_certificate", {"removed": list(removed), "pieces": pieces}),
    ]
    positive = [v.id for v in g.vertices if v.genus >= 1]
    if positive:
        steps.append(TraceStep("elliptic_replacement", {"vertices": positive, "self_int": "inf"}))
    valency_two = valency_two_removals(g, removed)
    if valency_two:
        steps.append(TraceStep("valency_two_removal", {"vertices": valency_two}))
    logger.info(f"theorem_c: every loop has infinite order, removals {list(removed)}")
    return {v: GammaVerdict(v, Status.INFINITE, trace=tuple(steps)) for v in g.vertex_ids}


@dataclass(frozen=True)
class EngineResult:
    theorem: str
    verdicts: Dict[int, GammaVerdict]

    def json(self) -> dict:
        return {"theorem": self.theorem, "verdicts": [self.verdicts[v].json() for v in sorted(self.verdicts)]}


class TheoremEngine:
    name = None

    def __call__(self, g: PlumbingGraph) -> EngineResult:
        return EngineResult(self.name, self.verdicts(g))

    def verdicts(self, g: PlumbingGraph) -> Verdicts:
        raise NotImplementedError

    @staticmethod
    def add_args(parser):
        pass

    @classmethod
    def from_args(cls, args):
        return cls()


@register_theorem("a")
class TheoremA(TheoremEngine):
    """
    Nef trees: no rational curve of self-intersection above -2.

    Usage:
        :code:`--theorem a`
    """

    def verdicts(self, g: PlumbingGraph) -> Verdicts:
        return theorem_a(g)


@register_theorem("b")
class TheoremB(TheoremEngine):
    """
    Minimal trees, rational curves of self-intersection at most -1.

    Usage:
        :code:`--theorem b`
    """

    def verdicts(self, g: PlumbingGraph) -> Verdicts:
        return theorem_b(g)


def add_certificate_args(parser):
    parser.add_argument(
        "--max-certificate-states",
        type=int,
        default=20000,
        help="Vertex sets the certificate search may visit before giving up.",
    )


@register_theorem("c")
class TheoremC(TheoremEngine):
    """
    Nef trees reducible to elementary-infinite pieces.

    Usage:
        :code:`--theorem c`

    Additional command line arguments:

    .. argparse::
        :ref: plumbing.decision.engines.add_certificate_args
        :passparser:
        :prog:
    """

    def __init__(self, max_states: int = 20000) -> None:
        self.max_states = max_states

    def verdicts(self, g: PlumbingGraph) -> Verdicts:
        return theorem_c(g, self.max_states)

    @staticmethod
    def add_args(parser):
        add_certificate_args(parser)

    @classmethod
    def from_args(cls, args):
        return cls(args.max_certificate_states)


@register_theorem("auto")
class AutoTheorem(TheoremEngine):
    """
    Theorem C, falling back to B and then A when hypotheses fail.

    Usage:
        :code:`--theorem auto`
    """

    def __init__(self, max_states: int = 20000) -> None:
        self.engines = [TheoremC(max_states), TheoremB(), TheoremA()]

    def __call__(self, g: PlumbingGraph) -> EngineResult:
        errors = []
        for engine in self.engines:
            try:
                return engine(g)
            except HypothesisViolated as error:
                logger.info(f"{error.theorem} does not apply: {'; '.join(error.reasons)}")
                errors.append(error)
        raise HypothesisViolated(
            "auto",
            [reason for error in errors for reason in error.reasons],
            {v for error in errors for v in error.vertices},
        )

    @staticmethod
    def add_args(parser):
        add_certificate_args(parser)

    @classmethod
    def from_args(cls, args):
        return cls(args.max_certificate_states)
