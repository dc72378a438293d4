"""Dense exact linear algebra over GF(p), backed by int64 numpy arrays.

Gauss-Jordan with deterministic pivoting: the pivot is always the first
nonzero entry in column order, so reduced forms, ranks and nullspace bases
are reproducible across runs.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows, cols: int) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, cols), dtype=np.int64)
    return a.reshape(-1, cols)


def rref(a: np.ndarray, p: int):
    """Reduced row echelon form: returns (R, rank, pivot_columns)."""
    r = np.array(a, dtype=np.int64) % p
    n_rows, n_cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            r[[row, pr]] = r[[pr, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = r[row] * inv % p
        column = r[:, col].copy()
        column[row] = 0
        if column.any():
            r = (r - np.outer(column, r[row])) % p
        pivots.append(col)
        row += 1
    return r, row, pivots


def rank(a: np.ndarray, p: int) -> int:
    return rref(a, p)[1]


def nullspace(a: np.ndarray, p: int) -> list[np.ndarray]:
    """Canonical nullspace basis: one vector per free column, unit there,
    sorted by free-column index."""
    r, rk, pivots = rref(a, p)
    n_cols = a.shape[1]
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(n_cols, dtype=np.int64)
        v[f] = 1
        for j, pc in enumerate(pivots):
            v[pc] = (-int(r[j, f])) % p
        basis.append(v)
    return basis


def solve(a: np.ndarray, b, p: int):
    """One solution of a x = b with free variables set to 0, or None if inconsistent."""
    b = np.asarray(b, dtype=np.int64) % p
    aug = np.concatenate([np.array(a, dtype=np.int64) % p, b.reshape(-1, 1)], axis=1)
    r, rk, pivots = rref(aug, p)
    if pivots and pivots[-1] == a.shape[1]:
        return None
    x = np.zeros(a.shape[1], dtype=np.int64)
    for j, pc in enumerate(pivots):
        x[pc] = r[j, -1]
    return x


def inverse(a: np.ndarray, p: int):
    """Matrix inverse over GF(p), or None if singular."""
    a = np.array(a, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse requires a square matrix")
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    r, rk, pivots = rref(aug, p)
    if rk < n or pivots[:n] != list(range(n)):
        return None
    return r[:, n:]
