import enum
import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set, Tuple, Union

from plumbing.errors import NotElliptic, UnknownGenerator
from plumbing.graph.plumbing_graph import INF, PlumbingGraph, SelfInt, Weight
from plumbing.group.intalg import IntMatrix, cokernel_coordinates, cokernel_order, smith_normal_form
from plumbing.group.words import (
    Commutator,
    Factor,
    GenKind,
    Generator,
    Power,
    Word,
    commutator,
    conjugate,
    gamma,
)

logger = logging.getLogger("plumbing.presentation")


class Provenance(enum.IntEnum):
    GLOBAL_COMMUTATION = 0
    MAIN = 1
    LOCAL_COMMUTATION = 2
    EXTRA = 3


@dataclass(frozen=True)
class Relator:
    provenance: Provenance
    vertices: Tuple[int, ...]
    factors: Tuple[Factor, ...]
    word: Word = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "word", Word.product(f.expand() for f in self.factors))

    @classmethod
    def from_word(cls, word: Word, provenance: Provenance = Provenance.EXTRA, vertices=()) -> "Relator":
        return cls(provenance, tuple(vertices), (Power(word),))

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[Generator, ...]
    relators: Tuple[Relator, ...]

    @property
    def words(self) -> List[Word]:
        return [r.word for r in self.relators]

    def gamma(self, vertex_id: int) -> Generator:
        return self.generator(gamma(vertex_id).name)

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGenerator(name)

    def check_word(self, w: Word) -> None:
        known = set(self.generators)
        for g in w.generators():
            if g not in known:
                raise UnknownGenerator(g.name)

    def with_relators(self, extra: Iterable[Union[Relator, Word]]) -> "Presentation":
        added = tuple(r if isinstance(r, Relator) else Relator.from_word(r) for r in extra)
        return Presentation(self.generators, self.relators + added)

    def substitute_trivial(self, gammas: Iterable[int]) -> "Presentation":
        """Quotient by the normal closure of the given loops, with those generators removed."""
        killed = {gamma(i) for i in gammas}
        images = {g: Word() for g in killed}
        relators = []
        for r in self.relators:
            word = r.word.substitute(images)
            if not word.is_identity():
                relators.append(Relator.from_word(word, r.provenance, r.vertices))
        return Presentation(
            tuple(g for g in self.generators if g not in killed), tuple(relators)
        )

    def export_text(self) -> str:
        return export_text(self)


def spanning_tree(g: PlumbingGraph) -> Set[int]:
    """Indices into ``g.edges`` of a breadth-first spanning tree.

    The search starts at the smallest id and scans edges in their sorted
    order, so the tree only depends on the graph.
    """
    root = g.vertex_ids[0]
    visited, tree = {root}, set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for k, (i, j) in enumerate(g.edges):
            if u not in (i, j):
                continue
            w = j if i == u else i
            if w not in visited:
                visited.add(w)
                tree.add(k)
                queue.append(w)
    return tree


def _lambda_generators(g: PlumbingGraph, tree: Set[int]) -> Dict[int, Generator]:
    copies = Counter()
    lambdas = {}
    for k, (i, j) in enumerate(g.edges):
        if k not in tree:
            copies[(i, j)] += 1
            lambdas[k] = Generator(GenKind.LAMBDA, i, j, copies[(i, j)])
    return lambdas


def _loop_across(g: PlumbingGraph, lambdas: Dict[int, Generator], k: int, vertex_id: int) -> Word:
    """The loop around the curve met by ``vertex_id`` across edge ``k``."""
    i, j = g.edges[k]
    other = j if vertex_id == i else i
    if k not in lambdas:
        return Word.of(gamma(other))
    bridge = Word.of(lambdas[k])
    if vertex_id != i:
        bridge = bridge.inverse()
    return conjugate(Word.of(gamma(other)), bridge)


def build_presentation(g: PlumbingGraph) -> Presentation:
    """Presentation of the local fundamental group of the plumbing.

    Relators come in three families, in this order: the handles of each
    curve commute with its loop; the main relation of each curve with a
    finite weight, written ``prod [a, b] * prod loop^-1 * g^m`` with the
    neighbouring loops in increasing neighbour id; the loops at both ends of
    every edge commute.
    """
    tree = spanning_tree(g)
    lambdas = _lambda_generators(g, tree)

    generators = [gamma(v.id) for v in g.vertices]
    generators += lambdas.values()
    for v in g.vertices:
        for h in range(1, v.genus + 1):
            generators += [Generator(GenKind.A, v.id, h), Generator(GenKind.B, v.id, h)]
    generators.sort(key=lambda x: x.sort_key)

    relators = []
    for v in g.vertices:
        g_i = gamma(v.id)
        for h in range(1, v.genus + 1):
            a, b = Generator(GenKind.A, v.id, h), Generator(GenKind.B, v.id, h)
            relators.append(Relator(Provenance.GLOBAL_COMMUTATION, (v.id,), (Commutator(a, g_i),)))
            relators.append(Relator(Provenance.GLOBAL_COMMUTATION, (v.id,), (Commutator(g_i, b),)))

    for v in g.vertices:
        if v.is_infinite:
            continue
        factors: List[Factor] = [
            Commutator(Generator(GenKind.A, v.id, h), Generator(GenKind.B, v.id, h))
            for h in range(1, v.genus + 1)
        ]
        incident = sorted(
            (k for k, e in enumerate(g.edges) if v.id in e),
            key=lambda k: (sum(g.edges[k]) - v.id, k),
        )
        factors += [Power(_loop_across(g, lambdas, k, v.id), -1) for k in incident]
        if v.m:
            factors.append(Power(Word.of(gamma(v.id)), v.m))
        relator = Relator(Provenance.MAIN, (v.id,), tuple(factors))
        if not relator.word.is_identity():
            relators.append(relator)

    for k, (i, j) in enumerate(g.edges):
        if k in lambdas:
            factor = Power(commutator(Word.of(gamma(i)), _loop_across(g, lambdas, k, i)))
        else:
            factor = Commutator(gamma(i), gamma(j))
        relators.append(Relator(Provenance.LOCAL_COMMUTATION, (i, j), (factor,)))

    presentation = Presentation(tuple(generators), tuple(relators))
    logger.debug(
        f"Presentation with {len(generators)} generators and {len(relators)} relators, "
        f"{len(lambdas)} edges outside the spanning tree"
    )
    return presentation


def export_text(p: Presentation) -> str:
    gens = ", ".join(x.name for x in p.generators)
    rels = ", ".join(str(r) for r in p.relators)
    return f"gens: {gens}; rels: {rels};"


def simplify_genus(g: PlumbingGraph) -> PlumbingGraph:
    """Replace every curve of genus at least two by an elliptic one."""
    for v in g.vertices:
        if v.genus >= 2:
            g = g.with_vertex(v.id, genus=1)
    return g


def replace_elliptic(g: PlumbingGraph, v: int, n: Union[int, Weight]) -> PlumbingGraph:
    """Turn an elliptic curve into a rational one of self-intersection ``-n`` (or ``INF``)."""
    vertex = g.vertex(v)
    if vertex.genus != 1:
        raise NotElliptic(v, vertex.genus)
    self_int: SelfInt = INF if n is INF else -n
    return g.with_vertex(v, genus=0, self_int=self_int)


@dataclass(frozen=True)
class Abelianization:
    invariant_factors: List[int]
    gamma_images: Dict[int, List[int]]
    gamma_orders: Dict[int, int]

    def json(self) -> dict:
        return {
            "invariant_factors": self.invariant_factors,
            "gamma": {
                str(v): {"image": self.gamma_images[v], "order": self.gamma_orders[v]}
                for v in sorted(self.gamma_images)
            },
        }


def relation_matrix(p: Presentation) -> IntMatrix:
    return IntMatrix.from_rows(
        [[w.exponent_sum(x) for x in p.generators] for w in p.words], cols=len(p.generators)
    )


def element_homology_order(p: Presentation, w: Word) -> int:
    """Order of the image of ``w`` in the abelianization, ``0`` when infinite."""
    p.check_word(w)
    snf = smith_normal_form(relation_matrix(p))
    return cokernel_order(snf, [w.exponent_sum(x) for x in p.generators])


def abelianization(p: Presentation) -> Abelianization:
    """Invariant factors and loop images.

    Unit factors are dropped and free factors appear as ``0``; the image of
    each loop lists its coordinates along the remaining factors.
    """
    snf = smith_normal_form(relation_matrix(p))
    invariants = snf.invariants
    kept = [k for k, d in enumerate(invariants) if d != 1]
    images, orders = {}, {}
    for x in p.generators:
        if x.kind != GenKind.GAMMA:
            continue
        vector = [int(x == y) for y in p.generators]
        coordinates = cokernel_coordinates(snf, vector)
        images[x.i] = [
            coordinates[k] % invariants[k] if invariants[k] else coordinates[k] for k in kept
        ]
        orders[x.i] = cokernel_order(snf, vector)
    return Abelianization([invariants[k] for k in kept], images, orders)
