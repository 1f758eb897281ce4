"""Pure-numpy twins of the _kernels_numba kernels.

Same bit-packed layout and signatures; row operations are vectorized
across rows instead of jit-compiled.
"""

import numpy as np

ONE = np.uint64(1)


def rref(a, ncols, pivot_limit):
    rows, _ = a.shape
    pivots = np.full(rows, -1, np.int64)
    r = 0
    for c in range(min(ncols, pivot_limit)):
        w = c >> 6
        mask = ONE << np.uint64(c & 63)
        hits = np.nonzero(a[r:, w] & mask)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        sel = (a[:, w] & mask).astype(bool)
        sel[r] = False
        if sel.any():
            a[sel] ^= a[r]
        pivots[r] = c
        r += 1
        if r == rows:
            break
    return pivots, r


def matmul_acc(a, a_cols, b, out):
    m = a.shape[0]
    for j in range(a_cols):
        sel = (a[:, j >> 6] & (ONE << np.uint64(j & 63))).astype(bool)
        if sel.any():
            out[sel] ^= b[j]


def reduce_mod(rows, basis, pivots, npiv):
    for k in range(npiv):
        c = int(pivots[k])
        sel = (rows[:, c >> 6] & (ONE << np.uint64(c & 63))).astype(bool)
        if sel.any():
            rows[sel] ^= basis[k]
