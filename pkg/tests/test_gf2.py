import pytest
from hypothesis import given, strategies as st

from pivotkit.errors import DimensionMismatch, PivotOnZero
from pivotkit.gf2 import (BitMatrix, format_matrix, matrix_pivot, parse_matrix,
                          rank, xor_rank)

from oracles import rank_by_span


def bitmatrices(max_dim=5):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(st.integers(0, (1 << c) - 1 if c else 0),
                               min_size=r, max_size=r).map(
                lambda rows: BitMatrix(r, c, rows))))


class TestRank:
    def test_identity(self):
        assert rank(BitMatrix.identity(3)) == 3

    def test_all_ones(self):
        assert rank(BitMatrix.ones(4, 5)) == 1

    def test_dependent_rows(self):
        # rows XOR to zero, so only two are independent
        m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert rank(m) == rank_by_span(m) == 2

    def test_empty(self):
        assert rank(BitMatrix.zeros(0, 3)) == 0
        assert rank(BitMatrix.zeros(3, 0)) == 0

    @given(bitmatrices())
    def test_matches_span_oracle(self, m):
        assert rank(m) == rank_by_span(m)

    @given(bitmatrices())
    def test_transpose_invariant(self, m):
        assert rank(m) == rank(m.transpose())


class TestMatrixPivot:
    def test_one_by_one(self):
        m = BitMatrix.from_rows([[1]])
        assert matrix_pivot(m, 0, 0) == m

    def test_entrywise_formula(self):
        m = BitMatrix.from_rows([[1, 1], [1, 0]])
        assert matrix_pivot(m, 0, 0).to_lists() == [[1, 1], [1, 1]]

    def test_involution_of_previous(self):
        m = BitMatrix.from_rows([[1, 1], [1, 1]])
        assert matrix_pivot(m, 0, 0).to_lists() == [[1, 1], [1, 0]]

    def test_pivot_on_zero_raises(self):
        with pytest.raises(PivotOnZero):
            matrix_pivot(BitMatrix.from_rows([[0, 1], [1, 0]]), 0, 0)

    def test_involution_exhaustive_3x3(self):
        for bits in range(1 << 9):
            m = BitMatrix(3, 3, [(bits >> (3 * i)) & 7 for i in range(3)])
            for x in range(3):
                for y in range(3):
                    if m.get(x, y):
                        assert matrix_pivot(matrix_pivot(m, x, y), x, y) == m

    def test_preserves_pivot_row_and_column(self):
        m = BitMatrix.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
        p = matrix_pivot(m, 1, 1)
        assert [p.get(1, j) for j in range(3)] == [m.get(1, j) for j in range(3)]
        assert [p.get(i, 1) for i in range(3)] == [m.get(i, 1) for i in range(3)]


class TestXorRank:
    def test_self_difference(self):
        m = BitMatrix.from_rows([[1, 0], [1, 1]])
        assert xor_rank(m, m) == 0

    def test_all_ones_difference(self):
        assert xor_rank(BitMatrix.zeros(2, 3), BitMatrix.ones(2, 3)) == 1

    def test_swap_matrix(self):
        m1 = BitMatrix.from_rows([[1, 0], [0, 1]])
        m2 = BitMatrix.from_rows([[0, 1], [1, 0]])
        assert xor_rank(m1, m2) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            xor_rank(BitMatrix.zeros(2, 2), BitMatrix.zeros(2, 3))

    @given(bitmatrices(4), bitmatrices(4))
    def test_symmetry_and_zero_iff_equal(self, m1, m2):
        if (m1.nrows, m1.ncols) != (m2.nrows, m2.ncols):
            return
        assert xor_rank(m1, m2) == xor_rank(m2, m1)
        assert (xor_rank(m1, m2) == 0) == (m1 == m2)


class TestFormat:
    def test_round_trip(self):
        m = BitMatrix.from_rows([[1, 0, 1], [0, 0, 1]])
        assert parse_matrix(format_matrix(m)) == m

    def test_comments_ignored(self):
        text = "# comment\nmatrix 1 2\n10\n"
        assert parse_matrix(text) == BitMatrix.from_rows([[1, 0]])

    def test_empty_matrix_round_trip(self):
        m = BitMatrix.zeros(0, 0)
        assert parse_matrix(format_matrix(m)) == m
