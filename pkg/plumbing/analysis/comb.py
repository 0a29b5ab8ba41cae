"""Classification of the rim loop of a comb.

A comb with rim weight ``-m`` and ``r`` strings has the group

    < g, beta_1 .. beta_r | g = beta_h^(b_h), g^m = beta_1^(d_1) ... beta_r^(d_r) >

where ``beta_h`` is the loop of the far end of string ``h`` and
``b_h > d_h`` are the last two terms of the string's chain sequence. The
classifier decides whether ``g`` has infinite order, and computes it in the
finite dihedral-type family ``b = (2, 2, n)``.
"""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

from plumbing.analysis.chain import chain_sequence
from plumbing.analysis.orders import Order, TraceStep
from plumbing.errors import (
    GcdViolation,
    InfiniteWeight,
    PositiveGenusString,
    StringWeightTooSmall,
)
from plumbing.graph.plumbing_graph import PlumbingGraph, Vertex
from plumbing.graph.shape import string_decomposition
from plumbing.group.intalg import IntMatrix, cokernel_order, lcm, rational_sum_eq, smith_normal_form
from plumbing.group.presentation import Presentation, Relator
from plumbing.group.words import GenKind, Generator, Word

logger = logging.getLogger("plumbing.comb")


@dataclass(frozen=True)
class CombParams:
    m: int
    b: Tuple[int, ...]
    d: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "d", tuple(self.d))
        assert len(self.b) == len(self.d), "b and d must have the same length"

    @property
    def r(self) -> int:
        return len(self.b)

    def satisfies_hypotheses(self) -> bool:
        return all(b > d >= 1 for b, d in zip(self.b, self.d))

    def sorted(self) -> "CombParams":
        pairs = sorted(zip(self.b, self.d))
        return CombParams(self.m, [b for b, _ in pairs], [d for _, d in pairs])

    def json(self) -> dict:
        return {"m": self.m, "b": list(self.b), "d": list(self.d)}

    def __str__(self) -> str:
        return f"({self.m}; {', '.join(map(str, self.b))}; {', '.join(map(str, self.d))})"


class ExceptionalKind(enum.Enum):
    DIHEDRAL = "dihedral"
    POLYHEDRAL = "polyhedral"


@dataclass(frozen=True)
class ExceptionalCase:
    """Finite-quotient family met by the sorted parameters ``(2, 2, n)`` or ``(2, 3, n)``."""

    kind: ExceptionalKind
    n: int
    t: int
    p: Optional[int] = None
    c: Optional[int] = None

    def json(self) -> dict:
        record = {"kind": self.kind.value, "n": self.n, "t": self.t}
        if self.p is not None:
            record["p"] = self.p
        if self.c is not None:
            record["c"] = self.c
        return record


@dataclass(frozen=True)
class CombVerdict:
    gamma_status: Order
    group_status: Order
    exceptional: Optional[ExceptionalCase] = None
    trace: Tuple[TraceStep, ...] = ()
    string_orders: Optional[Tuple[Order, ...]] = field(default=None, compare=False)

    def json(self) -> dict:
        return {
            "gamma": self.gamma_status.json(),
            "group": self.group_status.json(),
            "exceptional": self.exceptional.json() if self.exceptional else None,
            "trace": [step.json() for step in self.trace],
        }


def comb_params_from_graph(g: PlumbingGraph, rim: int) -> CombParams:
    strings = string_decomposition(g, rim)
    for v in g.vertices:
        if v.genus:
            raise PositiveGenusString(v.id)
    rim_vertex = g.vertex(rim)
    if rim_vertex.is_infinite:
        raise InfiniteWeight(rim, "the rim classification")

    b, d = [], []
    for string in strings:
        weights = []
        for vertex_id in string:
            v = g.vertex(vertex_id)
            if v.is_infinite:
                raise InfiniteWeight(v.id, "a string")
            if v.self_int > -2:
                raise StringWeightTooSmall(v.id, v.self_int)
            weights.append(v.m)
        data = chain_sequence(weights)
        b.append(data.a[-1])
        d.append(data.a[-2])
    return CombParams(rim_vertex.m, b, d)


def string_weights(b: int, d: int) -> List[int]:
    """Weights of a string with invariants ``b > d >= 1``, rim end first.

    This is the continued fraction ``b / d = w_1 - 1 / (w_2 - 1 / ...)``.
    """
    if not (b > d >= 1 and gcd(b, d) == 1):
        raise GcdViolation(f"String invariants need b > d >= 1 coprime, got b={b}, d={d}")
    weights = []
    while d > 0:
        w = -(-b // d)
        weights.append(w)
        b, d = d, w * d - b
    return weights


def comb_graph(p: CombParams) -> PlumbingGraph:
    """A comb realizing ``p``: the rim is vertex 1, strings follow in order."""
    vertices = [Vertex(1, 0, -p.m)]
    edges = []
    next_id = 2
    for b, d in zip(p.b, p.d):
        previous = 1
        for w in string_weights(b, d):
            vertices.append(Vertex(next_id, 0, -w))
            edges.append((previous, next_id))
            previous, next_id = next_id, next_id + 1
    return PlumbingGraph.build(vertices, edges)


def gcd_factors(p: CombParams) -> Tuple[int, ...]:
    return tuple(gcd(b, d) for b, d in zip(p.b, p.d))


def gcd_reduce(p: CombParams) -> CombParams:
    c = gcd_factors(p)
    return CombParams(
        p.m, [b // k for b, k in zip(p.b, c)], [d // k for d, k in zip(p.d, c)]
    )


def _relation_matrix(p: CombParams) -> IntMatrix:
    rows = []
    for h, b in enumerate(p.b):
        row = [0] * (p.r + 1)
        row[0], row[h + 1] = 1, -b
        rows.append(row)
    rows.append([p.m] + [-d for d in p.d])
    return IntMatrix.from_rows(rows, cols=p.r + 1)


def homology_gamma_order(p: CombParams) -> Order:
    """Order of the rim loop in the abelianized comb group."""
    snf = smith_normal_form(_relation_matrix(p))
    return Order.from_int(cokernel_order(snf, [1] + [0] * p.r))


def homology_group_order(p: CombParams) -> Order:
    order = 1
    for d in smith_normal_form(_relation_matrix(p)).invariants:
        order *= d
    return Order.from_int(order)


def polygonal_status(b: Sequence[int]) -> Order:
    """Order of ``< x_1 .. x_r | x_h^(b_h), x_1 ... x_r >`` for ``b_h >= 2``."""
    b = sorted(b)
    assert all(x >= 2 for x in b)
    if len(b) <= 1:
        return Order.finite(1)
    if len(b) == 2:
        return Order.finite(gcd(*b))
    if len(b) >= 4 or sum(Fraction(1, x) for x in b) <= 1:
        return Order.infinite()
    if b[:2] == [2, 2]:
        return Order.finite(2 * b[2])
    return Order.finite({3: 12, 4: 24, 5: 60}[b[2]])


def _dihedral_string_orders(
    q: CombParams, p_value: int, n: int, kept: List[int], c: Sequence[int], r: int
) -> Tuple[Order, ...]:
    """Orders of the far-end loops of all strings in the original indexing."""
    orders = [2 * p_value] * r
    for index, b in zip(kept, q.b):
        orders[index] = 4 * p_value if b == 2 else 2 * p_value * n
    return tuple(Order.finite(c[h] * orders[h]) for h in range(r))


def classify(p: CombParams) -> CombVerdict:
    """Decide the order of the rim loop.

    The pipeline divides each string pair by its gcd, folds strings with
    ``b = 1`` into the rim, then applies in turn: the cyclic case of fewer
    than three strings, the rational homology test, the infinite polygonal
    quotients, and finally the two finite families.
    """
    trace: List[TraceStep] = []
    unknown = Order.unknown()

    def verdict(gamma_status, group_status, exceptional=None, string_orders=None):
        result = CombVerdict(gamma_status, group_status, exceptional, tuple(trace), string_orders)
        logger.debug(f"classify{p} -> {gamma_status} ({', '.join(map(str, trace))})")
        return result

    if p.m < 1 or not all(b >= 1 and d >= 1 and (b == 1 or b > d) for b, d in zip(p.b, p.d)):
        trace.append(TraceStep("outside_hypotheses", {"params": str(p)}))
        return verdict(unknown, unknown)

    c = gcd_factors(p)
    reduced = gcd_reduce(p)
    if any(k > 1 for k in c):
        trace.append(TraceStep("gcd_reduction", {"factors": list(c), "reduced": str(reduced)}))

    kept = [h for h, b in enumerate(reduced.b) if b > 1]
    folded_m = reduced.m - sum(d for b, d in zip(reduced.b, reduced.d) if b == 1)
    q = CombParams(folded_m, [reduced.b[h] for h in kept], [reduced.d[h] for h in kept])
    if len(kept) < reduced.r:
        trace.append(TraceStep("string_fold", {"folded": [h + 1 for h in range(reduced.r) if h not in kept],
                                               "m": folded_m}))
        if folded_m <= 0:
            return verdict(unknown, unknown)

    if q.r < 3:
        gamma_status = homology_gamma_order(q)
        group_status = homology_group_order(q) if reduced == p else unknown
        trace.append(TraceStep("cyclic_comb", {"strings": q.r, "order": str(gamma_status)}))
        return verdict(gamma_status, group_status)

    if rational_sum_eq(q.m, q.b, q.d):
        total = sum(Fraction(d, b) for b, d in zip(q.b, q.d))
        trace.append(TraceStep("rim_homology", {"m": q.m, "sum": str(total)}))
        return verdict(Order.infinite(), Order.infinite())

    polygon = polygonal_status(q.b)
    if polygon.is_infinite:
        trace.append(TraceStep("polygonal_infinite", {"b": list(q.b)}))
        return verdict(Order.infinite(), Order.infinite())

    s = q.sorted()
    n, t = s.b[2], s.d[2]
    if s.b[:2] == (2, 2):
        if s.m >= 2:
            p_value = (s.m - 1) * n - t
            case = ExceptionalCase(ExceptionalKind.DIHEDRAL, n, t, p=p_value)
            trace.append(TraceStep("dihedral_exceptional", {"n": n, "t": t, "p": p_value}))
            group_status = Order.finite(4 * p_value * n) if reduced == p else Order.infinite()
            return verdict(
                Order.finite(2 * p_value),
                group_status,
                case,
                _dihedral_string_orders(q, p_value, n, kept, c, p.r),
            )
        case = ExceptionalCase(ExceptionalKind.DIHEDRAL, n, t, p=(s.m - 1) * n - t)
        trace.append(TraceStep("dihedral_unit_rim", {"n": n, "t": t}))
        homology = homology_gamma_order(q).value
        return verdict(Order.at_least(2, homology if homology >= 2 else None), unknown, case)

    if s.b[:2] == (2, 3):
        case = ExceptionalCase(ExceptionalKind.POLYHEDRAL, n, t, c=s.d[1])
        homology = homology_gamma_order(q)
        trace.append(TraceStep("polyhedral_exceptional", {"n": n, "c": s.d[1], "t": t,
                                                          "homology_order": homology.value}))
        # gamma maps to the central involution of the binary polyhedral image
        return verdict(Order.at_least(2, lcm(2, homology.value)), unknown, case)

    trace.append(TraceStep("unmatched", {"params": str(s)}))
    return verdict(unknown, unknown)


def dihedral_matrix_check(n: int, t: int, m: int) -> bool:
    """Check the two-dimensional complex representation of the dihedral-type comb group.

    With ``p = (m - 1) n - t`` and ``u`` a ``p``-th root of unity with
    ``u^n = exp(2 pi i / p)``, the matrices

        A = [[0, z_4p], [z_4p, 0]],  B = diag(z_2np, u / z_2np)

    satisfy ``A^2 = B^n = (A B^p)^2 = z_2p Id``.
    """
    if gcd(n, t) != 1:
        raise GcdViolation(f"gcd(n, t) = gcd({n}, {t}) != 1")
    assert m >= 2
    p = (m - 1) * n - t
    assert gcd(p, n) == 1

    def zeta(k):
        return np.exp(2j * np.pi / k)

    u = zeta(p) ** pow(n, -1, p) if p > 1 else 1.0
    A = np.array([[0, zeta(4 * p)], [zeta(4 * p), 0]], dtype=complex)
    B = np.diag([zeta(2 * n * p), u / zeta(2 * n * p)])
    target = zeta(2 * p) * np.eye(2)

    power = np.linalg.matrix_power
    checks = [
        power(A, 2),
        power(B, n),
        power(A @ power(B, p), 2),
    ]
    return bool(abs(u ** p - 1) < 1e-9) and all(np.allclose(x, target, atol=1e-9) for x in checks)


def comb_presentation(p: CombParams) -> Presentation:
    """The comb group on ``g0`` (the rim loop) and ``beta1 .. beta_r``."""
    rim = Generator(GenKind.GAMMA, 0)
    betas = [Generator(GenKind.BETA, h) for h in range(1, p.r + 1)]
    relators = [
        Relator.from_word(Word.of(beta, b) * Word.of(rim, -1)) for beta, b in zip(betas, p.b)
    ]
    relators += [
        Relator.from_word(Word.of(rim) * Word.of(beta) * Word.of(rim, -1) * Word.of(beta, -1))
        for beta in betas
    ]
    product = Word.product(Word.of(beta, d) for beta, d in zip(betas, p.d))
    relators.append(Relator.from_word(product.inverse() * Word.of(rim, p.m)))
    return Presentation(tuple([rim] + betas), tuple(relators))


def polygonal_presentation(b: Sequence[int]) -> Presentation:
    deltas = [Generator(GenKind.BETA, h) for h in range(1, len(b) + 1)]
    relators = [Relator.from_word(Word.of(x, k)) for x, k in zip(deltas, b)]
    relators.append(Relator.from_word(Word.product(Word.of(x) for x in deltas)))
    return Presentation(tuple(deltas), tuple(relators))
