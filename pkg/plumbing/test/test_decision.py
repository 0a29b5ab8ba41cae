from math import gcd
from pathlib import Path

import pytest

from plumbing.analysis import CombParams, Order, TraceStep
from plumbing.analysis.comb import comb_graph
from plumbing.data.graph_file import load_graph
from plumbing.decision import (
    Analyzer,
    GammaVerdict,
    Status,
    agrees,
    certificate_pieces,
    decompose_at,
    find_certificate,
    get_theorem_class,
    is_elementary_infinite,
    merge,
    split_at,
    theorem_a,
    theorem_b,
    theorem_c,
)
from plumbing.decision.certificate import valency_two_removals
from plumbing.decision.rational import reduce_to_rational
from plumbing.errors import HypothesisViolated, NotATree, NotMinimal, ValencyTooLow, VerdictConflict
from plumbing.graph import INF, PlumbingGraph
from plumbing.group import Word, build_presentation, gamma
from plumbing.oracle import EnumLimits, element_order
from plumbing.oracle.enumeration import coset_table

A4 = PlumbingGraph.chain([-2] * 4)
CYCLE = PlumbingGraph.build([(1, 0, -3), (2, 0, -3), (3, 0, -3)], [(1, 2), (2, 3), (1, 3)])
CERTIFICATES_PATH = Path(__file__).parent / "data" / "certificates"


def star(center=-2, teeth=(-2, -2, -2)):
    vertices = [(1, 0, center)] + [(k + 2, 0, w) for k, w in enumerate(teeth)]
    return PlumbingGraph.build(vertices, [(1, k + 2) for k in range(len(teeth))])


def two_combs():
    """Rims 1 and 6 with teeth of weights -2, -3, -7, joined through vertex 5."""
    return PlumbingGraph.build(
        [
            (1, 0, -2), (2, 0, -2), (3, 0, -3), (4, 0, -7), (5, 0, -2),
            (6, 0, -2), (7, 0, -2), (8, 0, -3), (9, 0, -7),
        ],
        [(1, 2), (1, 3), (1, 4), (1, 5), (5, 6), (6, 7), (6, 8), (6, 9)],
    )


def statuses(verdicts):
    return {v: (verdict.status, verdict.order, verdict.order_multiple_of) for v, verdict in verdicts.items()}


def facts(verdict):
    return [step.fact for step in verdict.trace]


def test_decompose():
    decomposition = decompose_at(star(), 1)
    assert decomposition.boundary == (2, 3, 4)
    assert [c.vertex_ids for c in decomposition.components] == [[2], [3], [4]]
    assert decomposition.component_index(3) == 1
    with pytest.raises(ValencyTooLow):
        decompose_at(A4, 2)
    assert [c.vertex_ids for c in split_at(A4, 2).components] == [[1], [3, 4]]
    with pytest.raises(NotATree):
        decompose_at(CYCLE, 1)


def test_merge():
    step = TraceStep("test")
    finite4 = GammaVerdict(1, Status.FINITE, 4)
    multiple2 = GammaVerdict(1, Status.NONTRIVIAL_ORDER_UNKNOWN, order_multiple_of=2)
    multiple3 = GammaVerdict(1, Status.NONTRIVIAL_ORDER_UNKNOWN, order_multiple_of=3)

    assert merge(GammaVerdict.unknown(1), finite4) == finite4
    assert merge(finite4, multiple2) == finite4
    assert merge(multiple2, multiple3).order_multiple_of == 6
    assert merge(multiple2, GammaVerdict(1, Status.INFINITE)).status == Status.INFINITE
    with pytest.raises(VerdictConflict):
        merge(finite4, GammaVerdict(1, Status.FINITE, 6))
    with pytest.raises(VerdictConflict):
        merge(finite4, multiple3)
    with pytest.raises(VerdictConflict):
        merge(GammaVerdict(1, Status.TRIVIAL, 1), finite4)

    lifted = finite4.lifted(step)
    assert (lifted.status, lifted.order, lifted.order_multiple_of) == (Status.NONTRIVIAL_ORDER_UNKNOWN, None, 4)
    assert lifted.trace == (step,)
    assert GammaVerdict(1, Status.TRIVIAL, 1).lifted(step).status == Status.UNKNOWN
    assert GammaVerdict.from_order(1, Order.at_least(2, 5)).order_multiple_of == 5
    assert GammaVerdict.from_order(1, Order.at_least(1)).status == Status.UNKNOWN


def test_theorem_a_chain_and_comb():
    assert statuses(theorem_a(A4)) == {v: (Status.FINITE, 5, None) for v in range(1, 5)}

    verdicts = theorem_a(comb_graph(CombParams(2, [2, 2, 3], [1, 1, 1])))
    assert {v: verdict.order for v, verdict in verdicts.items()} == {1: 4, 2: 8, 3: 8, 4: 12}
    assert facts(verdicts[1])[:3] == ["theorem_a", "nef_tree", "rim_classification"]
    assert facts(verdicts[4])[-1] == "string_loop_order"

    polyhedral = theorem_a(star(teeth=(-2, -3, -3)))
    assert statuses(polyhedral) == {
        1: (Status.NONTRIVIAL_ORDER_UNKNOWN, None, 10),
        2: (Status.NONTRIVIAL_ORDER_UNKNOWN, None, 2),
        3: (Status.NONTRIVIAL_ORDER_UNKNOWN, None, 3),
        4: (Status.NONTRIVIAL_ORDER_UNKNOWN, None, 3),
    }


def test_theorem_a_general_tree():
    g = PlumbingGraph.build(
        [(k, 0, -2) for k in range(1, 7)], [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    )
    verdicts = theorem_a(g)
    assert all(verdict.is_nontrivial for verdict in verdicts.values())
    assert verdicts[1].order_multiple_of == 2
    assert verdicts[3].order_multiple_of == 4
    assert "component_injection" in facts(verdicts[3])


def test_theorem_a_chain_with_unsorted_ids():
    # 3 - 1 - 2 - 4 with weights 2, 3, 2, 5: a = 1, 2, 5, 8, 35
    g = PlumbingGraph.build([(1, 0, -3), (2, 0, -2), (3, 0, -2), (4, 0, -5)], [(3, 1), (1, 2), (2, 4)])
    verdicts = theorem_a(g)
    assert statuses(verdicts) == {1: (Status.FINITE, 35, None), 2: (Status.FINITE, 7, None),
                                  3: (Status.FINITE, 35, None), 4: (Status.FINITE, 35, None)}
    p = build_presentation(g)
    table = coset_table(p)
    assert table.index == 35
    for v, verdict in verdicts.items():
        assert element_order(p, Word.of(gamma(v)), table=table) == Order.finite(verdict.order)


def test_theorem_a_tree_with_unsorted_chain_components():
    # removing 5 leaves the chain 3 - 1 - 2 - 4 of order 11
    g = PlumbingGraph.build(
        [(1, 0, -3), (2, 0, -2), (3, 0, -2), (4, 0, -2), (5, 0, -2), (6, 0, -3), (7, 0, -2)],
        [(1, 2), (1, 3), (2, 4), (2, 5), (5, 6), (5, 7)],
    )
    verdicts = theorem_a(g)
    assert sorted(verdicts) == list(range(1, 8))
    assert all(verdict.is_nontrivial for verdict in verdicts.values())
    assert verdicts[2].order_multiple_of == 11
    assert verdicts[5].order_multiple_of == 7
    assert verdicts[1].order_multiple_of == 55


@pytest.mark.parametrize("n", range(1, 11))
def test_theorem_a_on_a_n(n):
    g = PlumbingGraph.chain([-2] * n)
    verdicts = theorem_a(g)
    p = build_presentation(g)
    table = coset_table(p)
    assert table.index == n + 1
    for v in range(1, n + 1):
        assert verdicts[v].status == Status.FINITE
        assert verdicts[v].order == (n + 1) // gcd(n + 1, v)
        assert element_order(p, Word.of(gamma(v)), table=table) == Order.finite(verdicts[v].order)


def test_theorem_a_hypotheses():
    with pytest.raises(HypothesisViolated) as error:
        theorem_a(PlumbingGraph.chain([-2, -1, -2]))
    assert error.value.theorem == "theorem_a"
    assert error.value.vertices == [2]
    with pytest.raises(NotATree):
        theorem_a(CYCLE)


def test_reduction():
    g = PlumbingGraph.chain([-1, INF, -3], [2, 0, 1])
    reduced, steps = reduce_to_rational(g)
    assert reduced == PlumbingGraph.chain([-2, -2, -3])
    assert [s.fact for s in steps] == [
        "genus_simplification",
        "elliptic_replacement",
        "elliptic_replacement",
        "infinite_weight_relaxation",
    ]
    verdicts = theorem_a(PlumbingGraph.chain([-2, INF, -2]))
    assert all(v.status == Status.NONTRIVIAL_ORDER_UNKNOWN for v in verdicts.values())
    assert "reduction_transfer" in facts(verdicts[2])


def test_theorem_b():
    with pytest.raises(NotMinimal) as error:
        theorem_b(PlumbingGraph.chain([-1, -2]))
    assert error.value.vertices == [1]

    verdicts = theorem_b(star(center=-1))
    assert facts(verdicts[1])[:2] == ["theorem_b", "rational_weights_at_most_minus_one"]
    assert all(verdict.is_nontrivial for verdict in verdicts.values())
    assert verdicts[2].order_multiple_of == 2

    with pytest.raises(HypothesisViolated) as error:
        theorem_b(star(center=0))
    assert error.value.theorem == "theorem_b"
    assert error.value.vertices == [1]


def test_elementary_infinite():
    assert is_elementary_infinite(star(teeth=(-2, -3, -7)))[0]
    assert is_elementary_infinite(PlumbingGraph.chain([-1, -2], [1, 0]))[0]
    assert not is_elementary_infinite(A4)[0]
    assert not is_elementary_infinite(comb_graph(CombParams(2, [2, 2, 3], [1, 1, 1])))[0]
    assert not is_elementary_infinite(two_combs())[0]
    assert is_elementary_infinite(CYCLE) == (False, "not a tree")


def test_theorem_c_certificate():
    g = two_combs()
    assert find_certificate(g) == (5,)
    pieces = certificate_pieces(g, (5,))
    assert [(vertices, ok) for vertices, ok, _ in pieces] == [([1, 2, 3, 4], True), ([6, 7, 8, 9], True)]
    assert valency_two_removals(g, (5,)) == [5]

    verdicts = theorem_c(g)
    assert all(verdict.status == Status.INFINITE for verdict in verdicts.values())
    assert facts(verdicts[7]) == ["theorem_c", "nef_tree", "elementary_infinite_certificate", "valency_two_removal"]

    assert find_certificate(g, max_states=1) is None


def test_theorem_c_positive_genus():
    verdicts = theorem_c(PlumbingGraph.chain([-1, -2, -2], [1, 0, 0]))
    assert all(verdict.status == Status.INFINITE for verdict in verdicts.values())
    assert "elliptic_replacement" in facts(verdicts[3])


def test_theorem_c_fallback():
    verdicts = theorem_c(A4)
    assert facts(verdicts[1])[:2] == ["no_infinite_certificate", "theorem_a"]
    assert verdicts[1].order == 5
    with pytest.raises(HypothesisViolated) as error:
        theorem_c(PlumbingGraph.chain([-1, -2]))
    assert error.value.theorem == "theorem_c"


def test_engines():
    assert get_theorem_class("auto")()(A4).theorem == "c"
    assert get_theorem_class("auto")()(star(center=-1)).theorem == "b"
    assert get_theorem_class("a")()(A4).theorem == "a"
    with pytest.raises(HypothesisViolated) as error:
        get_theorem_class("auto")()(PlumbingGraph.chain([-2, -1, -3]))
    assert error.value.theorem == "auto"
    assert error.value.vertices == [2]
    with pytest.raises(RuntimeError):
        get_theorem_class("d")


def test_agrees():
    finite4 = GammaVerdict(1, Status.FINITE, 4)
    multiple2 = GammaVerdict(1, Status.NONTRIVIAL_ORDER_UNKNOWN, order_multiple_of=2)
    infinite = GammaVerdict(1, Status.INFINITE)
    trivial = GammaVerdict(1, Status.TRIVIAL, 1)

    assert agrees(finite4, Order.finite(4))
    assert not agrees(finite4, Order.finite(8))
    assert agrees(trivial, Order.finite(1))
    assert not agrees(infinite, Order.finite(3))
    assert agrees(multiple2, Order.finite(6))
    assert not agrees(multiple2, Order.finite(3))
    assert not agrees(multiple2, Order.finite(1))

    assert agrees(finite4, Order.at_least(4, 2))
    assert not agrees(finite4, Order.at_least(3, 3))
    assert agrees(infinite, Order.at_least(3))
    assert not agrees(trivial, Order.at_least(2))

    assert agrees(GammaVerdict.unknown(1), Order.finite(2)) is None
    assert agrees(finite4, Order.exhausted(100)) is None


@pytest.mark.parametrize(
    "graph",
    [
        A4,
        star(),
        star(teeth=(-2, -3, -3)),
        comb_graph(CombParams(2, [2, 2, 3], [1, 1, 1])),
        comb_graph(CombParams(2, [2, 3, 5], [1, 2, 4])),
        PlumbingGraph.chain([-3, -2, -4]),
    ],
)
def test_oracle_consistency(graph):
    report = Analyzer(get_theorem_class("auto")(), oracle=True)(graph)
    assert report.error is None
    assert report.oracle.group_order.is_finite
    assert False not in report.oracle.agreement.values()


def test_report():
    report = Analyzer(get_theorem_class("auto")(), show_presentation=True)(CYCLE)
    record = report.json()
    assert list(record) == [
        "graph", "shape", "hypotheses", "theorem", "engine", "error", "verdicts", "presentation"
    ]
    assert record["graph"] == {"vertices": 3, "edges": 3, "betti_number": 1, "is_tree": False}
    assert record["error"]["type"] == "NotATree"
    assert record["verdicts"] == []
    assert record["presentation"].startswith("gens: g1, g2, g3, l2_3;")

    hypotheses = Analyzer(get_theorem_class("a")())(PlumbingGraph.chain([-2, INF])).hypotheses()
    assert hypotheses["positivity_index"] is None
    assert hypotheses["all_nef"] and hypotheses["minimal"]


@pytest.mark.parametrize("path", sorted(CERTIFICATES_PATH.glob("*.yaml")), ids=lambda path: path.stem)
def test_certificate_corpus(path):
    # infinite_*: a certificate exists, so the enumeration must never close
    # finite_*: no certificate, the fallback verdicts must match the finite group
    g = load_graph(path)
    certified = path.stem.startswith("infinite")
    limits = EnumLimits(max_cosets=300, max_power=2) if certified else EnumLimits()
    report = Analyzer(get_theorem_class("c")(), limits, oracle=True)(g)
    assert report.error is None
    assert sorted(report.verdicts) == sorted(g.vertex_ids)
    removed = find_certificate(g)
    if certified:
        assert removed is not None
        assert all(elementary for _, elementary, _ in certificate_pieces(g, removed))
        assert all(verdict.status == Status.INFINITE for verdict in report.verdicts.values())
        assert not report.oracle.group_order.is_finite
        assert not any(order.is_finite for order in report.oracle.orders.values())
    else:
        assert removed is None
        assert all(verdict.is_nontrivial for verdict in report.verdicts.values())
        assert facts(report.verdicts[g.vertex_ids[0]])[0] == "no_infinite_certificate"
        assert report.oracle.group_order.is_finite
    assert False not in report.oracle.agreement.values()
