"""Exact linear algebra over the rationals (numpy object arrays of Fractions)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def zeros(shape: tuple[int, ...]) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out[...] = Fraction(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def from_rows(rows) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = Fraction(v)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(a, b)


def det(mat: np.ndarray) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    m = np.array(mat, dtype=object)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r, col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[[col, pivot]] = m[[pivot, col]]
            result = -result
        result *= m[col, col]
        inv = Fraction(1) / m[col, col]
        for r in range(col + 1, n):
            if m[r, col] != 0:
                factor = m[r, col] * inv
                m[r, col:] = m[r, col:] - factor * m[col, col:]
    return result


def inverse(mat: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination."""
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    m = np.hstack([np.array(mat, dtype=object), identity(n)])
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r, col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        if pivot != col:
            m[[col, pivot]] = m[[pivot, col]]
        m[col] = m[col] * (Fraction(1) / m[col, col])
        for r in range(n):
            if r != col and m[r, col] != 0:
                m[r] = m[r] - m[r, col] * m[col]
    return m[:, n:]


def leading_principal_minors(mat: np.ndarray) -> list[Fraction]:
    n = mat.shape[0]
    return [det(mat[: i + 1, : i + 1]) for i in range(n)]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)
