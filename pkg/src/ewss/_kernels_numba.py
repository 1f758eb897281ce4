"""Hot GF(2) kernels, numba-compiled.

Matrices are row-major bit-packed: uint64 array of shape (rows, words),
column c lives in word c >> 6 at bit c & 63.  All three kernels have a
pure-numpy twin in _kernels_numpy with the same contract.
"""

import numpy as np
from numba import njit

ONE = np.uint64(1)


@njit(cache=True)
def rref(a, ncols, pivot_limit):
    """In-place reduced row echelon form over GF(2).

    Pivots are searched in columns [0, pivot_limit); row operations act
    on full rows, so trailing columns may hold an augmented block.
    Returns (pivots, rank) where pivots[r] is the pivot column of row r
    (-1 past the rank).
    """
    rows, words = a.shape
    pivots = np.full(rows, -1, np.int64)
    r = 0
    for c in range(ncols if ncols < pivot_limit else pivot_limit):
        w = c >> 6
        mask = ONE << np.uint64(c & 63)
        p = -1
        for i in range(r, rows):
            if a[i, w] & mask:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for t in range(words):
                tmp = a[r, t]
                a[r, t] = a[p, t]
                a[p, t] = tmp
        for i in range(rows):
            if i != r and (a[i, w] & mask):
                for t in range(words):
                    a[i, t] ^= a[r, t]
        pivots[r] = c
        r += 1
        if r == rows:
            break
    return pivots, r


@njit(cache=True)
def matmul_acc(a, a_cols, b, out):
    """out ^= a @ b over GF(2); a is (m, wa) with a_cols logical columns."""
    m = a.shape[0]
    wb = out.shape[1]
    for i in range(m):
        for j in range(a_cols):
            if a[i, j >> 6] & (ONE << np.uint64(j & 63)):
                for t in range(wb):
                    out[i, t] ^= b[j, t]


@njit(cache=True)
def reduce_mod(rows, basis, pivots, npiv):
    """Reduce each row of `rows` in place modulo an RREF basis."""
    n = rows.shape[0]
    words = rows.shape[1]
    for i in range(n):
        for k in range(npiv):
            c = pivots[k]
            if rows[i, c >> 6] & (ONE << np.uint64(c & 63)):
                for t in range(words):
                    rows[i, t] ^= basis[k, t]
