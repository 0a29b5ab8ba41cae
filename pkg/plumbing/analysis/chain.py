"""Linear chains of rational curves.

The group of a chain with weights ``m_1, ..., m_n`` (read from the free
end) is cyclic, generated by the loop of the first curve. Setting
``a_1 = 1``, ``a_2 = m_1`` and ``a_{i+1} = m_i a_i - a_{i-1}``, the loop of
curve ``i`` is ``a_i`` times the generator and the group has order
``|a_{n+1}|`` (infinite cyclic when ``a_{n+1} = 0``).
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from plumbing.analysis.orders import Order
from plumbing.errors import EmptyChain, IndexOutOfRange


@dataclass(frozen=True)
class ChainData:
    m: Tuple[int, ...]
    a: Tuple[int, ...]

    @property
    def group_order(self) -> Order:
        return Order.from_int(self.a[-1])

    def gamma_order(self, i: int) -> Order:
        if not 1 <= i <= len(self.m):
            raise IndexOutOfRange(i, len(self.m))
        order, power = abs(self.a[-1]), abs(self.a[i - 1])
        if order == 0:
            return Order.infinite() if power else Order.finite(1)
        return Order.finite(order // gcd(order, power))


def chain_sequence(m: Sequence[int]) -> ChainData:
    if not m:
        raise EmptyChain("A chain needs at least one curve")
    a = [1, m[0]]
    for k in range(1, len(m)):
        a.append(m[k] * a[k] - a[k - 1])
    return ChainData(tuple(m), tuple(a))


def gamma_order_in_chain(m: Sequence[int], i: int) -> Order:
    return chain_sequence(m).gamma_order(i)


def gamma_orders(m: Sequence[int]) -> List[Order]:
    data = chain_sequence(m)
    return [data.gamma_order(i) for i in range(1, len(m) + 1)]


def order_growth_check(m: Sequence[int], j: int, boost: int) -> bool:
    """Whether raising ``m_j`` by ``boost`` leaves every loop order at least as large."""
    if not 1 <= j <= len(m):
        raise IndexOutOfRange(j, len(m))
    assert all(x >= 2 for x in m)
    boosted = list(m)
    boosted[j - 1] += boost
    return all(
        after.value >= before.value for before, after in zip(gamma_orders(m), gamma_orders(boosted))
    )
