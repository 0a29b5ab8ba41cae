import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from plumbing.errors import NotSquare, NotSymmetric, ZeroDenominator
from plumbing.group.intalg import (
    IntMatrix,
    bareiss_determinant,
    char_poly,
    cokernel_order,
    gcd_list,
    invariant_factors,
    rational_sum,
    rational_sum_eq,
    signature,
    smith_normal_form,
)


def random_matrix(rng, rows, cols, bound=9):
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def random_symmetric(rng, n, bound=5):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return IntMatrix.from_rows(rows, cols=n)


def test_smith_normal_form():
    A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    snf = smith_normal_form(A)
    assert snf.invariants == [2, 6, 12]
    assert snf.U @ A @ snf.V == snf.D
    assert invariant_factors(A) == [2, 6, 12]

    assert invariant_factors(IntMatrix.from_rows([[1, 0, 0], [0, 0, 0]], cols=3)) == [0, 0]
    assert invariant_factors(IntMatrix.from_rows([[6, 4]])) == [2, 0]


def test_smith_normal_form_random():
    rng = random.Random(0)
    for _ in range(60):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, rows, cols)
        snf = smith_normal_form(A)
        assert snf.U @ A @ snf.V == snf.D
        assert abs(bareiss_determinant(snf.U)) == 1
        assert abs(bareiss_determinant(snf.V)) == 1

        diagonal = snf.D.diagonal()
        assert all(d >= 0 for d in diagonal)
        assert all(snf.D[i, j] == 0 for i in range(rows) for j in range(cols) if i != j)
        nonzero = [d for d in diagonal if d]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))

        # the first factor is the gcd of the entries
        entries_gcd = gcd_list(x for row in A.entries for x in row)
        assert (diagonal[0] if diagonal else 0) == entries_gcd
        if rows == cols:
            product = 1
            for d in diagonal:
                product *= d
            assert product == abs(bareiss_determinant(A))


def test_cokernel_order():
    # Z / 3, the first coordinate is twice the second
    A = IntMatrix.from_rows([[1, -2], [2, -1]])
    snf = smith_normal_form(A)
    assert cokernel_order(snf, [1, 0]) == 3
    assert cokernel_order(snf, [0, 0]) == 1
    free = smith_normal_form(IntMatrix.from_rows([[1, -1]]))
    assert cokernel_order(free, [1, 0]) == 0


def test_bareiss_determinant():
    assert bareiss_determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert bareiss_determinant(IntMatrix.from_rows([[2, 4], [1, 2]])) == 0
    assert bareiss_determinant(IntMatrix.identity(0)) == 1
    rng = random.Random(1)
    for _ in range(40):
        A = random_matrix(rng, 4, 4)
        assert bareiss_determinant(A) == sympy.Matrix(A.to_lists()).det()
    with pytest.raises(NotSquare):
        bareiss_determinant(IntMatrix.from_rows([[1, 2]]))


def test_char_poly():
    assert char_poly(IntMatrix.from_rows([[-2, 1], [1, -2]])) == [1, 4, 3]
    rng = random.Random(2)
    x = sympy.Symbol("x")
    for _ in range(30):
        A = random_matrix(rng, 4, 4)
        expected = sympy.Matrix(A.to_lists()).charpoly(x).all_coeffs()
        assert char_poly(A) == [int(c) for c in expected]
    with pytest.raises(NotSquare):
        char_poly(IntMatrix.from_rows([[1, 2]]))


def test_signature():
    assert signature(IntMatrix.from_rows([[1]])) == (1, 0, 0)
    assert signature(IntMatrix.from_rows([[-2, 1], [1, -2]])) == (0, 0, 2)
    assert signature(IntMatrix.from_rows([[1, 1], [1, 1]])) == (1, 1, 0)
    with pytest.raises(NotSymmetric):
        signature(IntMatrix.from_rows([[1, 2], [0, 1]]))

    rng = random.Random(3)
    for _ in range(40):
        M = random_symmetric(rng, rng.randint(1, 5))
        eigenvalues = np.linalg.eigvalsh(np.array(M.to_lists(), dtype=float))
        if np.any(np.abs(eigenvalues) < 1e-6):
            continue
        assert signature(M) == (int(np.sum(eigenvalues > 0)), 0, int(np.sum(eigenvalues < 0)))


def test_rational_sum():
    assert rational_sum([2, 3, 6], [1, 1, 1]) == Fraction(1)
    assert rational_sum_eq(1, [2, 3, 6], [1, 1, 1])
    assert not rational_sum_eq(2, [2, 3, 7], [1, 1, 1])
    assert rational_sum_eq(2, [2, 2, 2, 2], [1, 1, 1, 1])
    with pytest.raises(ZeroDenominator):
        rational_sum([2, 0], [1, 1])
    assert gcd_list([12, 18, 30]) == 6
