"""Dense complex LU decomposition with partial pivoting.

Systems here are small (n of order tens), so a plain Doolittle
factorization with vectorized rank-1 updates is plenty.
"""
from __future__ import annotations

from typing import Tuple

import numpy as np

from .errors import SingularMatrix

# A pivot smaller than this times the matrix inf-norm is treated as zero.
PIVOT_RTOL = 1e-14


def norm_inf(a: np.ndarray) -> float:
    """Infinity norm: max abs row sum for matrices, max abs for vectors."""
    a = np.asarray(a)
    if a.ndim == 1:
        return float(np.max(np.abs(a))) if a.size else 0.0
    return float(np.max(np.sum(np.abs(a), axis=1)))


def lu_factor(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Factor PM = LU in place; returns (combined LU, row permutation)."""
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SingularMatrix("matrix must be square, got shape %s" % (a.shape,))
    n = a.shape[0]
    scale = norm_inf(a)
    if scale == 0.0:
        raise SingularMatrix("zero matrix")
    perm = np.arange(n)
    for j in range(n):
        p = j + int(np.argmax(np.abs(a[j:, j])))
        if np.abs(a[p, j]) < PIVOT_RTOL * scale:
            raise SingularMatrix(
                "pivot %.3e below %.1e * ||M||_inf at column %d"
                % (abs(a[p, j]), PIVOT_RTOL, j)
            )
        if p != j:
            a[[j, p]] = a[[p, j]]
            perm[[j, p]] = perm[[p, j]]
        a[j + 1:, j] /= a[j, j]
        a[j + 1:, j + 1:] -= np.outer(a[j + 1:, j], a[j, j + 1:])
    return a, perm


def lu_backsolve(lu: np.ndarray, perm: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve using a factorization from :func:`lu_factor`."""
    n = lu.shape[0]
    x = np.array(rhs, dtype=np.complex128)[perm]
    for j in range(n):  # forward: L y = P rhs (unit diagonal)
        x[j + 1:] -= lu[j + 1:, j] * x[j]
    for j in range(n - 1, -1, -1):  # backward: U x = y
        x[j] /= lu[j, j]
        x[:j] -= lu[:j, j] * x[j]
    return x


def lu_solve(m: np.ndarray, rhs: np.ndarray) -> Tuple[np.ndarray, float]:
    """Solve M x = rhs; returns (x, residual) with residual = ||Mx - rhs||_inf.

    One step of iterative refinement is applied if the first residual
    exceeds 1e-12 * (1 + ||rhs||_inf).
    """
    m = np.asarray(m, dtype=np.complex128)
    b = np.asarray(rhs, dtype=np.complex128)
    if b.ndim != 1 or m.shape[0] != b.shape[0]:
        raise SingularMatrix(
            "dimension mismatch: matrix %s vs rhs %s" % (m.shape, b.shape)
        )
    lu, perm = lu_factor(m)
    x = lu_backsolve(lu, perm, b)
    r = b - m @ x
    residual = norm_inf(r)
    if residual > 1e-12 * (1.0 + norm_inf(b)):
        x = x + lu_backsolve(lu, perm, r)
        residual = norm_inf(b - m @ x)
    return x, residual
