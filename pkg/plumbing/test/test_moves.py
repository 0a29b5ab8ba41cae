import random

import pytest

from plumbing.errors import InfiniteWeight, InvalidMove, MultiEdgeCreated, NotATree, NotContractible
from plumbing.graph import INF, MoveKind, PlumbingGraph, blow_down, blow_up_edge, blow_up_point, full_blow_down, replay
from plumbing.graph.moves import apply_move_spec, parse_move_spec

A4 = PlumbingGraph.chain([-2] * 4)
A4_BLOWUP = PlumbingGraph.build(
    [(1, 0, -2), (2, 0, -3), (3, 0, -3), (4, 0, -2), (5, 0, -1)],
    [(1, 2), (2, 5), (3, 5), (3, 4)],
)


def random_minimal_tree(rng, size):
    vertices = [(1, rng.choice([0, 0, 1]), rng.randint(-5, -2))]
    edges = []
    for k in range(2, size + 1):
        vertices.append((k, 0, rng.randint(-5, -2)))
        edges.append((rng.randint(1, k - 1), k))
    return PlumbingGraph.build(vertices, edges)


def random_blow_ups(rng, g, count):
    records = []
    for _ in range(count):
        if g.edges and rng.random() < 0.5:
            g, record = blow_up_edge(g, rng.choice(g.edges))
        else:
            g, record = blow_up_point(g, rng.choice(g.vertex_ids))
        records.append(record)
    return g, records


def test_blow_up_edge():
    g, record = blow_up_edge(A4, (3, 2))
    assert g == A4_BLOWUP
    assert record.kind == MoveKind.BLOW_UP_EDGE
    assert record.vertex == 5 and record.edge == (2, 3)
    assert blow_down(g, 5)[0] == A4


def test_blow_up_point():
    g, record = blow_up_point(A4, 1)
    assert g.vertex(1).self_int == -3
    assert g.vertex(5).self_int == -1
    assert g.neighbors(5) == [1]
    assert record.base == 1
    assert blow_down(g, 5)[0] == A4


def test_blow_down_rejections():
    with pytest.raises(NotContractible) as error:
        blow_down(A4, 1)
    assert error.value.vertex_id == 1
    with pytest.raises(NotContractible):
        blow_down(PlumbingGraph.chain([-1]), 1)
    with pytest.raises(NotContractible):
        blow_down(PlumbingGraph.chain([-1], [1]), 1)
    with pytest.raises(InfiniteWeight):
        blow_up_point(PlumbingGraph.chain([INF]), 1)


def test_blow_down_multi_edge():
    # a -1 curve whose two neighbours already meet
    g = PlumbingGraph.build([(1, 0, -2), (2, 0, -2), (3, 0, -1)], [(1, 2), (1, 3), (2, 3)])
    result, record = blow_down(g, 3)
    assert record.multi_edge
    assert result.edge_multiplicity(1, 2) == 2
    assert result.vertex(1).self_int == -1


def test_full_blow_down():
    g, records = full_blow_down(A4_BLOWUP)
    assert g == A4
    assert [r.vertex for r in records] == [5]
    assert full_blow_down(A4) == (A4, [])
    with pytest.raises(NotATree):
        full_blow_down(PlumbingGraph.build([(1, 0, -2), (2, 0, -2)], [(1, 2), (1, 2)]))


def test_full_blow_down_multi_edge(monkeypatch):
    # neighbours of the (-1)-curve 3 already meet, which a tree never allows
    g = PlumbingGraph.build([(1, 0, -2), (2, 0, -2), (3, 0, -1)], [(1, 2), (1, 3), (2, 3)])
    with pytest.raises(NotATree):
        full_blow_down(g)
    monkeypatch.setattr(PlumbingGraph, "is_tree", lambda self: True)
    with pytest.raises(MultiEdgeCreated) as error:
        full_blow_down(g)
    assert error.value.neighbors == (1, 2)


def test_blow_up_down_round_trip():
    rng = random.Random(1)
    for _ in range(150):
        g = random_minimal_tree(rng, rng.randint(1, 6))
        blown, records = random_blow_ups(rng, g, 1)
        assert blow_down(blown, records[0].vertex)[0] == g


def test_full_blow_down_confluence():
    rng = random.Random(2)
    for _ in range(150):
        g = random_minimal_tree(rng, rng.randint(1, 6))
        blown, _ = random_blow_ups(rng, g, rng.randint(1, 5))
        assert full_blow_down(blown)[0] == g
        assert full_blow_down(blown, random.Random(rng.random()))[0] == g


def test_replay():
    rng = random.Random(3)
    g = random_minimal_tree(rng, 5)
    blown, records = random_blow_ups(rng, g, 4)
    assert replay(g, records) == blown
    down, down_records = full_blow_down(blown)
    assert replay(blown, down_records) == down
    _, record = blow_up_point(g, 1)
    with pytest.raises(InvalidMove):
        replay(blown, [record])


def test_move_spec():
    assert parse_move_spec(["blowup-edge", "2", "3"]) == ("blowup-edge", (2, 3))
    assert parse_move_spec(["full-blowdown"]) == ("full-blowdown", ())
    with pytest.raises(InvalidMove):
        parse_move_spec(["blowdown"])
    with pytest.raises(InvalidMove):
        parse_move_spec(["blowdown", "x"])
    with pytest.raises(InvalidMove):
        parse_move_spec(["flip", "1"])

    g, records = apply_move_spec(A4, ["blowup-edge", "2", "3"])
    assert g == A4_BLOWUP and len(records) == 1
    assert apply_move_spec(g, ["blowdown", "5"])[0] == A4
    assert apply_move_spec(g, ["full-blowdown"])[0] == A4
