from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgain.qlinalg import (AdjointRankError, QMatrix, RankMethod, bipartite_block,
                           complex_adjoint, complex_rank, conjugate_transpose, is_hermitian,
                           principal_submatrix, rank_adjoint, rank_by_fractions, rank_exact)
from qgain.quaternion import I, J, K, ONE, ZERO, Quaternion, conjugate

from conftest import quaternions, units


def matrices(max_dim=5, entries=quaternions):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.one_of(st.just(ZERO), entries), min_size=r * c, max_size=r * c)
        .map(lambda e: QMatrix(r, c, e))))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_three_rank_oracles_agree(A):
    exact = rank_exact(A)
    ref = rank_by_fractions(A)
    assert exact.rank == ref.rank == rank_adjoint(A).rank
    assert [c for _, c in exact.pivot_trace] == [c for _, c in ref.pivot_trace]


@settings(max_examples=60, deadline=None)
@given(matrices(4, units), matrices(4, units))
def test_rank_of_product_bounded(A, B):
    if A.cols != B.rows:
        B = QMatrix(A.cols, B.cols, (list(B.entries) * A.cols)[:A.cols * B.cols])
    assert rank_exact(A @ B).rank <= min(rank_exact(A).rank, rank_exact(B).rank)


@settings(max_examples=60, deadline=None)
@given(matrices(5))
def test_rank_invariant_under_conjugate_transpose(A):
    assert rank_exact(A).rank == rank_exact(conjugate_transpose(A)).rank


def test_left_row_dependence():
    # row 2 = j * row 1 on the left; right multiplication would give rank 2
    A = QMatrix.from_rows([[ONE, I], [J, J * I]])
    assert rank_exact(A).rank == 1
    B = QMatrix.from_rows([[ONE, I], [J, I * J]])
    assert rank_exact(B).rank == 2


def test_rank_edge_cases():
    assert rank_exact(QMatrix.zeros(3, 3)).rank == 0
    assert rank_exact(QMatrix(0, 0, [])).rank == 0
    assert rank_exact(QMatrix.diagonal([ONE, I, ZERO, K])).rank == 3
    assert rank_exact(QMatrix.zeros(2, 2)).method is RankMethod.EXACT


def test_fraction_entries():
    h = Fraction(1, 3)
    A = QMatrix.from_rows([[Quaternion(h, h), Quaternion(0, 0, h)],
                           [Quaternion(1, 1), Quaternion(0, 0, 1)]])
    assert rank_exact(A).rank == 1


def test_large_entries_fall_back_exactly():
    big = Quaternion(2 ** 40 + 1, 3, -(2 ** 35), 7)
    A = QMatrix.from_rows([[big, ONE, I], [I, big, J], [big * I, ONE * 2 + big, I + J]])
    assert rank_exact(A).rank == rank_by_fractions(A).rank


def test_complex_adjoint_shape_and_structure():
    A = QMatrix.from_rows([[ONE, J], [K, I]])
    chi = complex_adjoint(A)
    assert chi.shape == (4, 4)
    A1, A2 = chi[:2, :2], chi[:2, 2:]
    assert np.allclose(chi[2:, :2], -A2.conj()) and np.allclose(chi[2:, 2:], A1.conj())


def test_complex_rank_tolerance():
    M = np.diag([1.0, 1e-12])
    assert complex_rank(M, 1e-9) == 1
    assert complex_rank(M, 1e-14) == 2
    assert complex_rank(np.zeros((2, 3)), 1e-9) == 0


def test_adjoint_odd_rank_raises(monkeypatch):
    import qgain.qlinalg as ql
    monkeypatch.setattr(ql, "complex_rank", lambda M, tol: 3)
    with pytest.raises(AdjointRankError):
        rank_adjoint(QMatrix.diagonal([ONE]))
    with pytest.raises(ValueError):
        rank_adjoint(QMatrix.diagonal([ONE]), tol=0)


def test_hermitian_and_submatrix():
    A = QMatrix.from_rows([[ZERO, I], [-I, ZERO]])
    assert is_hermitian(A)
    assert not is_hermitian(QMatrix.from_rows([[ZERO, I], [I, ZERO]]))
    assert principal_submatrix(A, [1]) == QMatrix.from_rows([[ZERO]])
    with pytest.raises(IndexError):
        principal_submatrix(A, [2])
    with pytest.raises(ValueError):
        principal_submatrix(A, [0, 0])


@settings(max_examples=60, deadline=None)
@given(matrices(4, units))
def test_bipartite_block_rank_is_twice(B):
    M = bipartite_block(B)
    assert is_hermitian(M)
    assert rank_exact(M).rank == 2 * rank_exact(B).rank


def test_matrix_validation():
    with pytest.raises(ValueError):
        QMatrix(2, 2, [ONE])
    with pytest.raises(ValueError):
        QMatrix.from_rows([[ONE], [ONE, ONE]])
    with pytest.raises(ValueError):
        QMatrix.zeros(2, 3) @ QMatrix.zeros(2, 3)


def test_matmul_and_conjugate_transpose():
    A = QMatrix.from_rows([[I, J]])
    assert (A @ conjugate_transpose(A)) == QMatrix.from_rows([[Quaternion(2)]])
    assert conjugate_transpose(A)[1, 0] == conjugate(J)
