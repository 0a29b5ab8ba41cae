import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from plumbing.analysis.orders import Order
from plumbing.group.intalg import lcm
from plumbing.group.presentation import Presentation
from plumbing.group.words import Word
from plumbing.oracle.coset_table import CosetTable, TableStatus

logger = logging.getLogger("plumbing.oracle")


@dataclass(frozen=True)
class EnumLimits:
    """Resource bounds of one enumeration.

    ``max_power`` bounds the powers ``w^k`` whose cyclic subgroups are
    enumerated when the whole group does not close.
    """

    max_cosets: int = 10 ** 6
    max_time: Optional[float] = None
    max_power: int = 6

    def __post_init__(self):
        assert self.max_cosets > 0
        assert self.max_time is None or self.max_time > 0
        assert self.max_power >= 1


def word_letters(p: Presentation, w: Word) -> List[int]:
    p.check_word(w)
    index = {g: k for k, g in enumerate(p.generators)}
    return [2 * index[g] + (0 if e == 1 else 1) for g, e in w.letters]


def coset_table(
    p: Presentation, lim: EnumLimits = EnumLimits(), subgroup: Sequence[Word] = ()
) -> CosetTable:
    relators = [word_letters(p, w.cyclically_reduced()) for w in p.words]
    table = CosetTable(
        len(p.generators),
        relators,
        [word_letters(p, w) for w in subgroup],
        max_cosets=lim.max_cosets,
        max_time=lim.max_time,
    )
    table.enumerate()
    return table


def group_order(p: Presentation, lim: EnumLimits = EnumLimits()) -> Order:
    logger.info(
        f"Enumerating cosets of the trivial subgroup ({len(p.generators)} generators, "
        f"{len(p.relators)} relators)"
    )
    table = coset_table(p, lim)
    if table.status == TableStatus.COMPLETE:
        logger.info(f"Group order {table.index}")
        return Order.finite(table.index)
    return Order.exhausted(table.high_water)


def presentation_order(p: Presentation, lim: EnumLimits = EnumLimits()) -> Optional[int]:
    order = group_order(p, lim)
    return order.value if order.is_finite else None


def element_order(
    p: Presentation, w: Word, lim: EnumLimits = EnumLimits(), table: Optional[CosetTable] = None
) -> Order:
    """Order of ``w``: exact if the group closes, else a bound from the cosets of ``<w^k>``.

    When the cosets of ``<w^k>`` close, ``w`` returns to the subgroup after
    ``gcd(k, ord(w))`` steps, so that orbit length both bounds and divides
    the order. ``table`` may carry an enumeration of the trivial subgroup
    already run under ``lim``.
    """
    letters = word_letters(p, w)
    if table is None:
        table = coset_table(p, lim)
    if table.status == TableStatus.COMPLETE:
        return Order.finite(table.orbit_length(letters)) if letters else Order.finite(1)
    if not letters:
        return Order.finite(1)

    bound, multiple = 1, 1
    for k in range(2, lim.max_power + 1):
        subgroup_table = coset_table(p, lim, [w ** k])
        if subgroup_table.status != TableStatus.COMPLETE:
            continue
        length = subgroup_table.orbit_length(letters)
        logger.debug(f"<{w}^{k}> has index {subgroup_table.index}, orbit length {length}")
        bound, multiple = max(bound, length), lcm(multiple, length)
    if bound >= 2:
        return Order.at_least(bound, multiple)
    return Order.exhausted(table.high_water)
