"""Dense quaternion matrices and their rank.

Two rank algorithms are provided.  :func:`rank_exact` is left-row Gaussian
elimination in exact arithmetic; it is the reported rank.  By the standard
theory of matrices over a division ring the left row rank equals the right
column rank, and both equal the rank of the conjugate transpose; the tests
check that identity directly.  :func:`rank_adjoint` embeds the matrix into a
complex matrix of twice the size and eliminates in floating point; it exists
only as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernel
from .quaternion import (ZERO, Quaternion, conjugate, format_quaternion, inverse,
                         multiply)


class RankMethod(str, Enum):
    EXACT = "exact"
    ADJOINT = "adjoint"


class AdjointRankError(ArithmeticError):
    """Odd complex rank of the adjoint: the tolerance separated a conjugate pair."""


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: RankMethod
    pivot_trace: Optional[tuple] = None


class QMatrix:
    """Immutable dense matrix of quaternions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Quaternion]):
        entries = tuple(e if isinstance(e, Quaternion) else Quaternion(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Quaternion]) -> "QMatrix":
        n = len(values)
        out = [ZERO] * (n * n)
        for i, v in enumerate(values):
            out[i * n + i] = v
        return cls(n, n, out)

    def __getitem__(self, idx):
        r, c = idx
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(r)) for r in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in range(self.rows):
            left = self.row(r)
            for c in range(other.cols):
                acc = ZERO
                for t in range(self.cols):
                    a = left[t]
                    b = other.entries[t * other.cols + c]
                    if a and b:
                        acc = acc + multiply(a, b)
                out.append(acc)
        return QMatrix(self.rows, other.cols, out)

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(format_quaternion(q) for q in self.row(r)) + "]"
                         for r in range(self.rows))


def conjugate_transpose(A: QMatrix) -> QMatrix:
    return QMatrix(A.cols, A.rows,
                   [conjugate(A.entries[k * A.cols + j]) for j in range(A.cols) for k in range(A.rows)])


def is_hermitian(A: QMatrix) -> bool:
    if A.rows != A.cols:
        return False
    n = A.rows
    e = A.entries
    return all(e[j * n + k] == conjugate(e[k * n + j]) for j in range(n) for k in range(j, n))


def principal_submatrix(A: QMatrix, indices: Sequence[int]) -> QMatrix:
    if A.rows != A.cols:
        raise ValueError("principal submatrix needs a square matrix")
    idx = list(indices)
    for i in idx:
        if not 0 <= i < A.rows:
            raise IndexError(f"index {i} out of range for {A.rows}x{A.cols}")
    if len(set(idx)) != len(idx):
        raise ValueError("duplicate indices")
    return QMatrix(len(idx), len(idx), [A[r, c] for r in idx for c in idx])


def bipartite_block(B: QMatrix) -> QMatrix:
    """The Hermitian block matrix [[0, B], [B*, 0]]."""
    p, q = B.shape
    n = p + q
    out = [ZERO] * (n * n)
    for r in range(p):
        for c in range(q):
            out[r * n + p + c] = B[r, c]
            out[(p + c) * n + r] = conjugate(B[r, c])
    return QMatrix(n, n, out)


def _integer_rows(A: QMatrix) -> list:
    # scale each row by the lcm of its denominators; a nonzero real factor is
    # central, so the left row space is unchanged
    data = []
    for r in range(A.rows):
        row = A.row(r)
        den = 1
        for q in row:
            for x in q.coeffs():
                if type(x) is not int:
                    den = lcm(den, x.denominator)
        for q in row:
            for x in q.coeffs():
                data.append(int(x * den))
    return data


def rank_exact(A: QMatrix) -> RankResult:
    """Left row rank by exact Gaussian elimination.

    The pivot is the first nonzero entry, scanning the current column top to
    bottom; the pivot row is normalized on the left and the target rows are
    cleared with left coefficients.  The pivot trace lists ``(row, column)``
    with rows in the original numbering.
    """
    if A.rows == 0 or A.cols == 0:
        return RankResult(0, RankMethod.EXACT, ())
    rank, pivots = kernel.qrank(A.rows, A.cols, _integer_rows(A))
    return RankResult(rank, RankMethod.EXACT, tuple(pivots))


def rank_by_fractions(A: QMatrix) -> RankResult:
    """Reference left-row Gauss-Jordan elimination over exact fractions.

    Slow; kept as an oracle for the integer kernels behind :func:`rank_exact`.
    """
    M = A.to_rows()
    order = list(range(A.rows))
    rank = 0
    pivots = []
    for c in range(A.cols):
        p = next((r for r in range(rank, A.rows) if M[r][c]), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        order[rank], order[p] = order[p], order[rank]
        pinv = inverse(M[rank][c])
        M[rank] = [multiply(pinv, x) for x in M[rank]]
        for i in range(A.rows):
            if i == rank or not M[i][c]:
                continue
            a = M[i][c]
            M[i] = [x - multiply(a, y) for x, y in zip(M[i], M[rank])]
        pivots.append((order[rank], c))
        rank += 1
        if rank == A.rows:
            break
    return RankResult(rank, RankMethod.EXACT, tuple(pivots))


def complex_adjoint(A: QMatrix) -> np.ndarray:
    """[[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j, in complex128."""
    c = np.array([[float(x) for x in q.coeffs()] for q in A.entries], dtype=float)
    c = c.reshape(A.rows, A.cols, 4)
    A1 = c[..., 0] + 1j * c[..., 1]
    A2 = c[..., 2] + 1j * c[..., 3]
    return np.block([[A1, A2], [-A2.conj(), A1.conj()]])


def complex_rank(M: np.ndarray, tol: float) -> int:
    """Rank by complete-pivoting elimination, stopping below tol * max|M|."""
    M = np.array(M, dtype=complex)
    if M.size == 0:
        return 0
    scale = np.abs(M).max()
    if scale == 0:
        return 0
    threshold = tol * scale
    rank = 0
    rows, cols = M.shape
    while rank < min(rows, cols):
        sub = np.abs(M[rank:, rank:])
        r, c = np.unravel_index(np.argmax(sub), sub.shape)
        if sub[r, c] <= threshold:
            break
        r += rank
        c += rank
        M[[rank, r]] = M[[r, rank]]
        M[:, [rank, c]] = M[:, [c, rank]]
        factors = M[rank + 1:, rank] / M[rank, rank]
        M[rank + 1:, rank:] -= np.outer(factors, M[rank, rank:])
        rank += 1
    return rank


def rank_adjoint(A: QMatrix, tol: float = 1e-9) -> RankResult:
    if tol <= 0:
        raise ValueError("tol must be positive")
    crank = complex_rank(complex_adjoint(A), tol)
    if crank % 2:
        raise AdjointRankError(f"complex adjoint rank {crank} is odd (tol={tol})")
    return RankResult(crank // 2, RankMethod.ADJOINT)
