"""Dense exact linear algebra over a small prime field.

Vectors are 1-D numpy int64 arrays with entries in [0, p); a "space" is
the row space of a 2-D array.  Canonical form is the reduced row echelon
form with zero rows dropped, which doubles as a dictionary key for
subspace deduplication.
"""

from __future__ import annotations

import numpy as np


def as_mat(rows, width: int | None = None, p: int = 2) -> np.ndarray:
    """Coerce to a 2-D int64 array reduced mod p."""
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return rows.astype(np.int64) % p
    rows = list(rows)
    if not rows:
        return np.zeros((0, width if width is not None else 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64) % p


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (R, pivots) where R has unit pivots with zeros above and
    below, zero rows dropped, and pivots lists the pivot columns.
    """
    R = M.astype(np.int64) % p
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R[: len(pivots)], pivots


def rank(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def row_space(M: np.ndarray, p: int) -> np.ndarray:
    return rref(M, p)[0]


def space_key(R: np.ndarray) -> bytes:
    """Hashable key for a canonical (rref) basis."""
    return R.tobytes() + bytes([R.shape[1] % 251])


def reduce_vec(v: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residual of v after elimination against the rref basis R."""
    out = v.astype(np.int64) % p
    for row, c in zip(R, pivots):
        if out[c]:
            out = (out - out[c] * row) % p
    return out


def in_space(v: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> bool:
    return not reduce_vec(v, R, pivots, p).any()


def space_sum(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    if A.shape[0] == 0:
        return row_space(B, p)
    if B.shape[0] == 0:
        return row_space(A, p)
    return row_space(np.vstack([A, B]), p)


def space_intersect(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Basis of the intersection of two row spaces (Zassenhaus)."""
    n = A.shape[1] if A.shape[0] else B.shape[1]
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    top = np.hstack([A, A])
    bot = np.hstack([B, np.zeros_like(B)])
    R, pivots = rref(np.vstack([top, bot]), p)
    # echelon rows whose left block vanished span the intersection
    out = [R[i, n:] for i in range(len(pivots)) if not R[i, :n].any()]
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    return row_space(np.array(out, dtype=np.int64), p)


def null_space(M: np.ndarray, p: int) -> np.ndarray:
    """Basis rows of the right kernel {x : M x = 0}."""
    R, pivots = rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    rows = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-int(R[i, f])) % p
        rows.append(v)
    if not rows:
        return np.zeros((0, n), dtype=np.int64)
    return row_space(np.array(rows, dtype=np.int64), p)


def solution_space_dim(M: np.ndarray, nunknowns: int, p: int) -> int:
    """Dimension of {x : M x = 0} for an (equations x unknowns) matrix."""
    if M.shape[0] == 0:
        return nunknowns
    return nunknowns - rank(M, p)
