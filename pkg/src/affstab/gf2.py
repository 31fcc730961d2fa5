"""Dense linear algebra over GF(2).

Vectors and matrices are numpy uint8 arrays with entries in {0, 1}.
Everything here is exact: rank, affine solves, kernels, left inverses,
and the decomposition of invertible matrices into elementary row
additions (the operations a CNOT circuit can realize).

All functions are pure; inputs are never mutated.  Pivoting is
first-nonzero with lowest-index ties, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def bits(seq) -> np.ndarray:
    """Coerce a sequence (or array) to a uint8 array over {0, 1}."""
    return np.asarray(seq, dtype=np.uint8) % 2


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix (or matrix-vector) product over GF(2)."""
    # uint8 matmul wraps mod 256, which preserves parity (256 is even).
    return (np.asarray(a, dtype=np.uint8) @ np.asarray(b, dtype=np.uint8)) % 2


def dot(a: np.ndarray, b: np.ndarray) -> int:
    """Inner product of two bit vectors, mod 2."""
    return int(np.bitwise_and(a, b).sum() % 2)


def row_echelon(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2).

    Args:
        m: Binary matrix (rows x cols).

    Returns:
        (rref, pivot_cols): the reduced matrix and the list of pivot
        column indices (its length is the GF(2) rank).
    """
    r = bits(m).copy()
    n_rows, n_cols = r.shape
    pivot_cols: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        hits = np.nonzero(r[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            r[[row, pivot]] = r[[pivot, row]]
        # Eliminate everywhere else in this column (full reduction).
        others = np.nonzero(r[:, col])[0]
        for other in others:
            if other != row:
                r[other] ^= r[row]
        pivot_cols.append(col)
        row += 1
    return r, pivot_cols


def rank(m: np.ndarray) -> int:
    """GF(2) rank of a binary matrix."""
    m = np.asarray(m, dtype=np.uint8)
    if m.size == 0:
        return 0
    return len(row_echelon(m)[1])


@dataclass
class AffineSolveResult:
    """Solution of M x = b over GF(2).

    When ``consistent``, the full solution set is
    ``particular + span(kernel_basis)``; ``kernel_basis`` rows are a
    linearly independent basis of the null space of M.
    """

    consistent: bool
    particular: np.ndarray | None
    kernel_basis: np.ndarray  # shape (dim_null, cols)


def kernel_basis(m: np.ndarray) -> np.ndarray:
    """Basis of the null space {v : Mv = 0}, as rows of a (k, cols) array.

    Returns an empty (0, cols) array iff M has full column rank.
    """
    m = bits(m)
    n_cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(n_cols, dtype=np.uint8)
    rref, pivots = row_echelon(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols), dtype=np.uint8)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = rref[row, fc]
    return basis


def solve_affine(m: np.ndarray, b: np.ndarray) -> AffineSolveResult:
    """Solve M x = b over GF(2).

    Args:
        m: Binary matrix (rows x cols).
        b: Binary vector of length rows.

    Returns:
        AffineSolveResult; ``particular`` has free variables set to 0.

    Raises:
        ValueError: if len(b) != rows.
    """
    m = bits(m)
    b = bits(b)
    n_rows, n_cols = m.shape
    if b.shape != (n_rows,):
        raise ValueError(f"right-hand side has length {b.shape}, expected {n_rows}")
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    rref, pivots = row_echelon(aug)
    if n_cols in pivots:
        return AffineSolveResult(False, None, kernel_basis(m))
    particular = np.zeros(n_cols, dtype=np.uint8)
    for row, pc in enumerate(pivots):
        particular[pc] = rref[row, n_cols]
    return AffineSolveResult(True, particular, kernel_basis(m))


def left_inverse(m: np.ndarray) -> np.ndarray:
    """A left inverse L with L m = I over GF(2).

    Requires full column rank; any valid left inverse may be returned
    (it is not unique when rows > cols).

    Raises:
        ValueError: if m is column-rank deficient.
    """
    m = bits(m)
    n_rows, n_cols = m.shape
    if n_cols == 0:
        return np.zeros((0, n_rows), dtype=np.uint8)
    aug = np.concatenate([m, np.eye(n_rows, dtype=np.uint8)], axis=1)
    rref, pivots = row_echelon(aug)
    col_pivots = [p for p in pivots if p < n_cols]
    if len(col_pivots) != n_cols:
        raise ValueError("matrix is column-rank deficient; no left inverse")
    # Row reduction gives E with E m = [I; 0]; its first cols rows are L.
    return rref[:n_cols, n_cols:].copy()


def decompose_invertible(e: np.ndarray) -> list[tuple[int, int]]:
    """Decompose an invertible matrix into elementary row additions.

    Returns a list of (target, source) pairs such that applying
    ``row[target] ^= row[source]`` to the identity, in order,
    reproduces ``e``.  Row swaps are emulated by three additions.

    Raises:
        ValueError: if e is not square or singular.
    """
    e = bits(e)
    n_rows, n_cols = e.shape
    if n_rows != n_cols:
        raise ValueError("matrix is not square")
    work = e.copy()
    ops: list[tuple[int, int]] = []

    def add(target: int, source: int) -> None:
        work[target] ^= work[source]
        ops.append((target, source))

    for col in range(n_cols):
        hits = np.nonzero(work[col:, col])[0]
        if hits.size == 0:
            raise ValueError("matrix is singular over GF(2)")
        pivot = col + int(hits[0])
        if pivot != col:
            add(col, pivot)
            add(pivot, col)
            add(col, pivot)
        for row in np.nonzero(work[:, col])[0]:
            if row != col:
                add(int(row), col)
    # work is now the identity: e = (recorded ops applied in reverse).
    return ops[::-1]


def replay_additions(ops: list[tuple[int, int]], n: int) -> np.ndarray:
    """Apply (target, source) row additions to the n x n identity."""
    m = np.eye(n, dtype=np.uint8)
    for target, source in ops:
        m[target] ^= m[source]
    return m
