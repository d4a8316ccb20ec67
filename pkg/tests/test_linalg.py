import random

import pytest

from wmatch.linalg import (
    IntMatrix,
    det_berkowitz,
    det_cofactor,
    det_lagrange,
    minor,
    trailing_zeros,
)


def all_01_matrices(n):
    for bits in range(1 << (n * n)):
        yield IntMatrix.from_rows(
            [[(bits >> (n * i + j)) & 1 for j in range(n)] for i in range(n)]
        )


def random_matrix(rng, n, lo=-9, hi=9):
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
    )


class TestIntMatrix:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            IntMatrix(())

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_entry_access_bounds(self):
        m = IntMatrix.identity(2)
        assert m.at(1, 1) == 1
        with pytest.raises(IndexError):
            m.at(2, 0)
        with pytest.raises(IndexError):
            m.at(0, -1)

    def test_with_entry_is_copy(self):
        m = IntMatrix.identity(2)
        m2 = m.with_entry(0, 1, 7)
        assert m.at(0, 1) == 0
        assert m2.at(0, 1) == 7


class TestMinor:
    def test_identity_2x2(self):
        assert minor(IntMatrix.identity(2), 0, 0).rows == ((1,),)

    def test_middle_deletion(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert minor(m, 1, 1).rows == ((1, 3), (7, 9))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            minor(IntMatrix.identity(3), 3, 0)

    def test_1x1_has_no_minor(self):
        with pytest.raises(ValueError):
            minor(IntMatrix.from_rows([[5]]), 0, 0)

    def test_input_unmodified(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        minor(m, 0, 0)
        assert m.rows == ((1, 2), (3, 4))


class TestDeterminants:
    def test_identity(self):
        assert det_berkowitz(IntMatrix.identity(3)) == 1
        assert det_cofactor(IntMatrix.identity(4)) == 1

    def test_1x1(self):
        assert det_cofactor(IntMatrix.from_rows([[7]])) == 7
        assert det_berkowitz(IntMatrix.from_rows([[7]])) == 7

    def test_swap_matrix(self):
        m = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert det_cofactor(m) == -1
        assert det_berkowitz(m) == -1

    def test_2x2_products(self):
        assert det_berkowitz(IntMatrix.from_rows([[2, 3], [4, 5]])) == -2
        assert det_lagrange(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_zero_matrix(self):
        assert det_lagrange(IntMatrix.zeros(2)) == 0

    def test_three_way_agreement_exhaustive_3x3(self):
        for m in all_01_matrices(3):
            assert det_berkowitz(m) == det_cofactor(m) == det_lagrange(m)

    def test_three_way_agreement_random(self):
        rng = random.Random(7)
        for n in (4, 5, 6):
            for _ in range(60):
                m = random_matrix(rng, n)
                assert det_berkowitz(m) == det_cofactor(m) == det_lagrange(m)

    def test_big_entries_stay_exact(self):
        big = 10**30
        m = IntMatrix.from_rows([[big, 1], [1, big]])
        assert det_berkowitz(m) == big * big - 1

    def test_cofactor_guard(self):
        with pytest.raises(ValueError):
            det_cofactor(IntMatrix.identity(13))

    def test_lagrange_guard(self):
        with pytest.raises(ValueError):
            det_lagrange(IntMatrix.identity(10))

    def test_permutation_matrices_unit_determinant(self):
        from itertools import permutations

        for n in range(1, 6):
            for perm in permutations(range(n)):
                p = IntMatrix.from_rows(
                    [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
                )
                assert det_berkowitz(p) in (-1, 1)

    def test_cofactor_expansion_identity_any_row(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 5)
            m = random_matrix(rng, n)
            d = det_berkowitz(m)
            for i in range(n):
                expansion = sum(
                    (-1 if (i + j) % 2 else 1) * m.at(i, j) * det_berkowitz(minor(m, i, j))
                    for j in range(n)
                )
                assert expansion == d


class TestTrailingZeros:
    def test_examples(self):
        assert trailing_zeros(12) == 2
        assert trailing_zeros(-8) == 3
        assert trailing_zeros(0) is None
        assert trailing_zeros(1) == 0

    def test_powers_of_two(self):
        for w in range(0, 70):
            assert trailing_zeros(1 << w) == w

    def test_factorization_property(self):
        rng = random.Random(13)
        for _ in range(500):
            y = rng.randint(-(10**12), 10**12)
            if y == 0:
                continue
            q = trailing_zeros(y)
            assert y % (1 << q) == 0
            assert (abs(y) >> q) % 2 == 1
