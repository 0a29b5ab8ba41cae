"""Exact integer linear algebra.

Everything here works on Python integers, so entries never overflow, and on
:class:`fractions.Fraction` where a quotient is needed. No floating point
is involved in any result that feeds a verdict.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from plumbing.errors import NotSquare, NotSymmetric, ZeroDenominator


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.entries) == self.rows
        assert all(len(row) == self.cols for row in self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        assert self.cols == other.rows
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in columns] for row in self.entries],
            cols=other.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix.from_rows([[-x for x in row] for row in self.entries], cols=self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(col) for col in zip(*self.entries)], cols=self.rows)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def diagonal(self) -> List[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with ``U`` and ``V`` unimodular."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariants(self) -> List[int]:
        """Diagonal of ``D``, padded with zeros to the column count."""
        diagonal = self.D.diagonal()
        return diagonal + [0] * (self.D.cols - len(diagonal))


def _swap_rows(M: List[List[int]], i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: List[List[int]], i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: List[List[int]], target: int, source: int, factor: int) -> None:
    if factor:
        M[target] = [a + factor * b for a, b in zip(M[target], M[source])]


def _add_col(M: List[List[int]], target: int, source: int, factor: int) -> None:
    if factor:
        for row in M:
            row[target] += factor * row[source]


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form by smallest-pivot elimination.

    The diagonal of the result is non-negative and each nonzero entry
    divides the next one.
    """
    m, n = A.rows, A.cols
    D = A.to_lists()
    U = IntMatrix.identity(m).to_lists()
    V = IntMatrix.identity(n).to_lists()

    t = 0
    while t < min(m, n):
        candidates = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not candidates:
            break
        _, i, j = min(candidates)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        pivot = D[t][t]
        for i in range(t + 1, m):
            q = D[i][t] // pivot
            _add_row(D, i, t, -q)
            _add_row(U, i, t, -q)
        for j in range(t + 1, n):
            q = D[t][j] // pivot
            _add_col(D, j, t, -q)
            _add_col(V, j, t, -q)

        # nonzero remainders are smaller than the pivot: pick again
        if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
            continue

        offender = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pivot), None
        )
        if offender is not None:
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)
            continue

        if pivot < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SnfResult(
        D=IntMatrix.from_rows(D, cols=n),
        U=IntMatrix.from_rows(U, cols=m),
        V=IntMatrix.from_rows(V, cols=n),
    )


def invariant_factors(A: IntMatrix) -> List[int]:
    """Invariant factors of the cokernel ``Z^cols / rowspace(A)``.

    Unit factors are dropped, free factors are reported as ``0`` at the end.
    """
    return [d for d in smith_normal_form(A).invariants if d != 1]


def cokernel_coordinates(snf: SnfResult, x: Sequence[int]) -> List[int]:
    """Coordinates of the class of the row vector ``x`` along the diagonal of ``D``."""
    V = snf.V
    return [sum(x[k] * V[k, j] for k in range(V.rows)) for j in range(V.cols)]


def cokernel_order(snf: SnfResult, x: Sequence[int]) -> int:
    """Order of the class of ``x`` in ``Z^cols / rowspace(A)``, ``0`` when infinite."""
    order = 1
    for d, y in zip(snf.invariants, cokernel_coordinates(snf, x)):
        if d == 0:
            if y != 0:
                return 0
        else:
            order = lcm(order, d // gcd(d, y))
    return order


def bareiss_determinant(A: IntMatrix) -> int:
    """Fraction-free Gaussian elimination."""
    if not A.is_square:
        raise NotSquare(f"Matrix is {A.rows}x{A.cols}")
    n = A.rows
    if n == 0:
        return 1
    M = A.to_lists()
    sign, previous = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            _swap_rows(M, k, swap)
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // previous
        previous = M[k][k]
    return sign * M[n - 1][n - 1]


def char_poly(A: IntMatrix) -> List[int]:
    """Coefficients of ``det(xI - A)``, leading coefficient first.

    Faddeev-LeVerrier; every division is exact over the integers.
    """
    if not A.is_square:
        raise NotSquare(f"Matrix is {A.rows}x{A.cols}")
    n = A.rows
    coefficients = [1]
    M = IntMatrix.zeros(n, n)
    identity = IntMatrix.identity(n)
    for k in range(1, n + 1):
        AM = A @ M
        M = IntMatrix.from_rows(
            [[AM[i, j] + coefficients[-1] * identity[i, j] for j in range(n)] for i in range(n)],
            cols=n,
        )
        trace = sum((A @ M).diagonal())
        assert trace % k == 0
        coefficients.append(-trace // k)
    return coefficients


def sign_variations(coefficients: Iterable[int]) -> int:
    signs = [c > 0 for c in coefficients if c]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def signature(M: IntMatrix) -> Tuple[int, int, int]:
    """``(n_plus, n_zero, n_minus)`` of a symmetric integer matrix.

    The spectrum is real, so Descartes' rule of signs on the characteristic
    polynomial counts the positive and negative roots exactly.
    """
    if not M.is_square:
        raise NotSquare(f"Matrix is {M.rows}x{M.cols}")
    if not M.is_symmetric():
        raise NotSymmetric("Signature is only defined for symmetric matrices")
    coefficients = char_poly(M)
    n_zero = 0
    while coefficients and coefficients[-1] == 0 and len(coefficients) > 1:
        coefficients.pop()
        n_zero += 1
    degree = len(coefficients) - 1
    n_plus = sign_variations(coefficients)
    n_minus = sign_variations(c * (-1) ** (degree - k) for k, c in enumerate(coefficients))
    assert n_plus + n_minus + n_zero == M.rows
    return n_plus, n_zero, n_minus


def rational_sum(b: Sequence[int], d: Sequence[int]) -> Fraction:
    if any(x == 0 for x in b):
        raise ZeroDenominator(f"Zero denominator in {list(b)}")
    return sum((Fraction(di, bi) for bi, di in zip(b, d)), Fraction(0))


def rational_sum_eq(m: int, b: Sequence[int], d: Sequence[int]) -> bool:
    """Whether ``m == sum(d[i] / b[i])`` exactly."""
    return rational_sum(b, d) == m


def gcd_list(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)
