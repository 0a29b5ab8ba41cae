"""Todd-Coxeter coset enumeration, HLT strategy with lookahead.

Generators are numbered ``0 .. n-1``; letter ``2k`` is generator ``k`` and
``2k + 1`` its inverse, so ``x ^ 1`` inverts a letter. Coincidences are
processed through a union-find forest, merging into the smaller coset.
"""

import enum
import logging
import time
from collections import deque
from typing import Dict, List, Optional, Sequence

logger = logging.getLogger("plumbing.oracle")


class TableStatus(enum.Enum):
    RUNNING = "running"
    COMPLETE = "complete"
    EXHAUSTED = "exhausted"


class _TableFull(Exception):
    pass


class CosetTable:
    """Action of the generators on the cosets of a subgroup.

    Args:
        n_generators: number of generators.
        relators: relator words as lists of letters.
        subgroup: generating words of the subgroup, as lists of letters.
        max_cosets: bound on the number of rows the table may hold.
        max_time: wall-clock bound in seconds, ``None`` for no bound.
    """

    def __init__(
        self,
        n_generators: int,
        relators: Sequence[Sequence[int]],
        subgroup: Sequence[Sequence[int]] = (),
        max_cosets: int = 10 ** 6,
        max_time: Optional[float] = None,
    ) -> None:
        self.n_columns = 2 * n_generators
        self.relators = [list(r) for r in relators if r]
        self.subgroup = [list(w) for w in subgroup if w]
        self.max_cosets = max_cosets
        self.max_time = max_time
        self.table: List[List[Optional[int]]] = [[None] * self.n_columns]
        self.parent: List[int] = [0]
        self.live = 1
        self.high_water = 1
        self.status = TableStatus.RUNNING
        self.definitions = 0
        self.deadline = None

    # union-find

    def rep(self, k: int) -> int:
        parent = self.parent
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def is_live(self, k: int) -> bool:
        return self.parent[k] == k

    def _merge(self, a: int, b: int, queue: deque) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        low, high = min(a, b), max(a, b)
        self.parent[high] = low
        self.live -= 1
        queue.append(high)

    def coincidence(self, a: int, b: int) -> None:
        queue = deque()
        self._merge(a, b, queue)
        table = self.table
        while queue:
            dead = queue.popleft()
            row = table[dead]
            for x in range(self.n_columns):
                target = row[x]
                if target is None:
                    continue
                inverse = x ^ 1
                table[target][inverse] = None
                mu, nu = self.rep(dead), self.rep(target)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][inverse] is not None:
                    self._merge(mu, table[nu][inverse], queue)
                else:
                    table[mu][x] = nu
                    table[nu][inverse] = mu

    # definitions and scans

    def define(self, coset: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise _TableFull()
        new = len(self.table)
        self.table.append([None] * self.n_columns)
        self.parent.append(new)
        self.table[coset][x] = new
        self.table[new][x ^ 1] = coset
        self.live += 1
        self.definitions += 1
        self.high_water = max(self.high_water, self.live)

    def scan(self, coset: int, word: Sequence[int], fill: bool) -> None:
        """Trace ``word`` from both ends of ``coset``; deduce, or define when ``fill``."""
        table = self.table
        forward, backward = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[forward][word[i]] is not None:
                forward = table[forward][word[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and table[backward][word[j] ^ 1] is not None:
                backward = table[backward][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                table[forward][word[i]] = backward
                table[backward][word[i] ^ 1] = forward
                return
            if not fill:
                return
            self.define(forward, word[i])

    def look_ahead(self) -> None:
        for coset in range(len(self.table)):
            if not self.is_live(coset):
                continue
            for word in self.relators:
                self.scan(coset, word, fill=False)
                if not self.is_live(coset):
                    break

    def compress(self) -> Dict[int, int]:
        """Drop dead cosets and renumber the live ones in order; returns the renumbering."""
        live = [k for k in range(len(self.table)) if self.is_live(k)]
        renumber = {old: new for new, old in enumerate(live)}
        self.table = [
            [None if t is None else renumber[self.rep(t)] for t in self.table[old]] for old in live
        ]
        self.parent = list(range(len(live)))
        self.live = len(live)
        return renumber

    def _out_of_time(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline

    def enumerate(self) -> TableStatus:
        if self.max_time is not None:
            self.deadline = time.monotonic() + self.max_time
        try:
            for word in self.subgroup:
                self.scan(0, word, fill=True)
        except _TableFull:
            self.status = TableStatus.EXHAUSTED
            return self.status

        alpha = 0
        while alpha < len(self.table):
            if self._out_of_time():
                logger.warning(f"Coset enumeration ran out of time with {self.live} live cosets")
                self.status = TableStatus.EXHAUSTED
                return self.status
            try:
                if self.is_live(alpha):
                    for word in self.relators:
                        self.scan(alpha, word, fill=True)
                        if not self.is_live(alpha):
                            break
                if self.is_live(alpha):
                    for x in range(self.n_columns):
                        if self.table[alpha][x] is None:
                            self.define(alpha, x)
            except _TableFull:
                self.look_ahead()
                renumber = self.compress()
                alpha = sum(1 for old in renumber if old < alpha)
                if len(self.table) >= self.max_cosets:
                    logger.warning(
                        f"Coset enumeration exhausted at {self.max_cosets} cosets "
                        f"(high water {self.high_water})"
                    )
                    self.status = TableStatus.EXHAUSTED
                    return self.status
                logger.debug(f"Lookahead compressed the table to {len(self.table)} cosets")
                continue
            alpha += 1

        self.compress()
        self.status = TableStatus.COMPLETE
        logger.debug(
            f"Coset enumeration complete: index {len(self.table)}, "
            f"{self.definitions} definitions, high water {self.high_water}"
        )
        return self.status

    @property
    def index(self) -> int:
        assert self.status == TableStatus.COMPLETE
        return len(self.table)

    def act(self, coset: int, word: Sequence[int]) -> int:
        for x in word:
            coset = self.table[coset][x]
        return coset

    def permutation(self, word: Sequence[int]) -> List[int]:
        """Image of every coset under right multiplication by ``word``."""
        assert self.status == TableStatus.COMPLETE
        return [self.act(k, word) for k in range(len(self.table))]

    def orbit_length(self, word: Sequence[int], start: int = 0) -> int:
        """Length of the cycle of ``start`` under ``word``."""
        length, coset = 1, self.act(start, word)
        while coset != start:
            coset = self.act(coset, word)
            length += 1
        return length
