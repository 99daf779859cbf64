import random
from fractions import Fraction

import pytest

from matsemi import (Matrix, Scalar, classify_entries, inverse,
                     matrix_product, matrix_vector, rank, rank_one_factor)
from _fx import M, outer, random_int_matrix


def test_scalar_arithmetic():
    a = Scalar(Fraction(1, 2), Fraction(3))
    b = Scalar(2, -1)
    assert a + b == Scalar(Fraction(5, 2), 2)
    assert a - b == Scalar(Fraction(-3, 2), 4)
    # (1/2 + 3i)(2 - i) = 1 - 1/2 i + 6i + 3 = 4 + 11/2 i
    assert a * b == Scalar(4, Fraction(11, 2))
    assert (a * b) / b == a
    assert -b == Scalar(-2, 1)
    assert b.conjugate() == Scalar(2, 1)
    assert b.magnitude_sq() == 5


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


def test_scalar_predicates():
    assert Scalar(0).is_nonneg_real
    assert not Scalar(0).is_positive_real
    assert Scalar(Fraction(2, 7)).is_positive_real
    assert not Scalar(1, 1).is_real
    assert not Scalar(0)
    assert Scalar(-1).is_real and not Scalar(-1).is_nonneg_real
    assert bool(Scalar(0, 1))


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        Scalar.of(True)


def test_matrix_construction_and_access():
    m = M([[1, 2], [3, 4], [5, 6]])
    assert (m.rows, m.cols) == (3, 2)
    assert m.entry(2, 1) == Scalar(6)
    assert m.row(1) == (Scalar(3), Scalar(4))
    assert m.col(0) == (Scalar(1), Scalar(3), Scalar(5))
    assert m.transpose().row(0) == (Scalar(1), Scalar(3), Scalar(5))
    with pytest.raises(ValueError):
        M([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix(0, 1, [])


def test_matrix_product_known():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert matrix_product(a, b) == M([[2, 1], [4, 3]])
    assert a @ b == M([[2, 1], [4, 3]])
    with pytest.raises(ValueError):
        matrix_product(a, M([[1, 2, 3]]))


def test_matrix_product_random_agrees_with_float():
    import numpy as np

    rng = random.Random(101)
    for _ in range(40):
        r, k, c = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = random_int_matrix(rng, r, k, -4, 4)
        b = random_int_matrix(rng, k, c, -4, 4)
        got = matrix_product(a, b)
        fa = np.array([[int(a.entry(i, j).re) for j in range(k)]
                       for i in range(r)])
        fb = np.array([[int(b.entry(i, j).re) for j in range(c)]
                       for i in range(k)])
        want = fa @ fb
        for i in range(r):
            for j in range(c):
                assert got.entry(i, j) == Scalar(int(want[i, j]))


def test_matrix_vector():
    m = M([[1, -1], [0, 2]])
    assert matrix_vector(m, (Scalar(3), Scalar(1))) == (Scalar(2), Scalar(2))


def test_rank_examples():
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(M([[1, 2], [2, 5]])) == 2
    assert rank(Matrix.zeros(3, 2)) == 0
    assert rank(Matrix.identity(4)) == 4
    # complex rank: rows (1, i) and (i, -1) are dependent
    m = Matrix.from_rows([[Scalar(1), Scalar(0, 1)],
                          [Scalar(0, 1), Scalar(-1)]])
    assert rank(m) == 1


def test_rank_random_agrees_with_float_svd():
    import numpy as np

    rng = random.Random(202)
    for _ in range(150):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = random_int_matrix(rng, r, c, -3, 3)
        fa = np.array([[float(m.entry(i, j).re) for j in range(c)]
                       for i in range(r)])
        # integer entries bounded by 3: float rank is reliable here
        assert rank(m) == np.linalg.matrix_rank(fa)


def test_inverse_round_trip():
    rng = random.Random(303)
    found = 0
    while found < 30:
        n = rng.randint(1, 4)
        m = random_int_matrix(rng, n, n, -3, 3)
        if rank(m) < n:
            continue
        found += 1
        assert matrix_product(m, inverse(m)) == Matrix.identity(n)
    with pytest.raises(ValueError):
        inverse(M([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        inverse(M([[1, 2, 3]]))


def test_rank_one_factor_reconstructs():
    rng = random.Random(404)
    for _ in range(60):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        u = [rng.randint(-3, 3) for _ in range(r)]
        v = [rng.randint(-3, 3) for _ in range(c)]
        if not any(u) or not any(v):
            continue
        m = outer(u, v)
        x, y = rank_one_factor(m)
        rebuilt = Matrix.from_rows([[xi * yj for yj in y] for xi in x])
        assert rebuilt == m
        lead = next(s for s in x if s)
        assert lead == Scalar(1)


def test_rank_one_factor_rejects_other_ranks():
    with pytest.raises(ValueError):
        rank_one_factor(Matrix.zeros(2, 2))
    with pytest.raises(ValueError):
        rank_one_factor(Matrix.identity(2))


def test_classify_entries():
    c = classify_entries(M([[1, 0], [0, Fraction(1, 2)]]))
    assert c.is_real and c.is_nonnegative and c.is_diagonal
    assert c.is_monomial and c.has_nonneg_diagonal and not c.is_positive

    c = classify_entries(M([[0, 2], [3, 0]]))
    assert c.is_monomial and not c.is_diagonal

    c = classify_entries(M([[1, -1], [0, 0]]))
    assert c.is_real and not c.is_nonnegative and c.has_nonneg_diagonal

    c = classify_entries(Matrix.from_rows([[Scalar(0, 1)]]))
    assert not c.is_real and not c.has_nonneg_diagonal

    c = classify_entries(M([[1, 2], [3, 4]]))
    assert c.is_positive and not c.is_monomial


def test_matrix_scale_and_sums():
    m = M([[1, -2], [0, 3]])
    assert m.scale(Fraction(1, 2)) == M([[Fraction(1, 2), -1],
                                         [0, Fraction(3, 2)]])
    assert m + (-m) == Matrix.zeros(2, 2)
    assert m - m == Matrix.zeros(2, 2)
