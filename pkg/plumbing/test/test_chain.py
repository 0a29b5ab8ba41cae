import random

import pytest

from plumbing.analysis import Order, chain_sequence, gamma_order_in_chain, order_growth_check
from plumbing.analysis.chain import gamma_orders
from plumbing.errors import EmptyChain, IndexOutOfRange
from plumbing.graph import PlumbingGraph
from plumbing.graph.shape import intersection_matrix
from plumbing.group.intalg import bareiss_determinant


def random_chain(rng, max_length=6, max_weight=6):
    return [rng.randint(2, max_weight) for _ in range(rng.randint(1, max_length))]


def test_type_a_chains():
    for n in range(1, 9):
        data = chain_sequence([2] * n)
        assert data.a == tuple(range(1, n + 2))
        assert data.group_order == Order.finite(n + 1)
    assert [o.value for o in gamma_orders([2, 2, 2])] == [4, 2, 4]


def test_degenerate_chains():
    assert chain_sequence([1]).group_order == Order.finite(1)
    assert gamma_order_in_chain([1], 1).is_trivial
    assert chain_sequence([0]).group_order.is_infinite
    assert gamma_order_in_chain([0], 1).is_infinite
    assert chain_sequence([2, 1, 2]).group_order.is_infinite


def test_chain_law():
    rng = random.Random(0)
    for _ in range(100):
        m = random_chain(rng)
        data = chain_sequence(m)
        assert all(later > earlier for earlier, later in zip(data.a, data.a[1:]))
        assert chain_sequence(m[::-1]).group_order == data.group_order

        matrix = intersection_matrix(PlumbingGraph.chain([-x for x in m]))
        assert data.a[-1] == bareiss_determinant(-matrix)

        # the loops at both ends generate the group
        assert gamma_order_in_chain(m, 1) == data.group_order
        assert gamma_order_in_chain(m, len(m)) == data.group_order


def test_gamma_orders_divide_group_order():
    rng = random.Random(1)
    for _ in range(100):
        m = random_chain(rng)
        order = chain_sequence(m).group_order.value
        assert all(order % o.value == 0 for o in gamma_orders(m))


def test_errors():
    with pytest.raises(EmptyChain):
        chain_sequence([])
    with pytest.raises(IndexOutOfRange) as error:
        gamma_order_in_chain([2, 2], 3)
    assert (error.value.index, error.value.length) == (3, 2)
    with pytest.raises(IndexOutOfRange):
        gamma_order_in_chain([2, 2], 0)
    with pytest.raises(IndexOutOfRange):
        order_growth_check([2, 2], 3, 1)


def test_order_growth_check():
    assert order_growth_check([2, 2, 2, 2, 2], 3, 1)
    assert order_growth_check([2, 2, 2, 2, 2], 2, 4)
    assert order_growth_check([2, 3], 1, 1)
    assert order_growth_check([2, 2, 2], 1, 2)
