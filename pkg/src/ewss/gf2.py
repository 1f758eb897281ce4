"""Exact linear algebra over GF(2).

Everything is bit-packed (uint64 words, little-endian within the word)
and uses the row-vector convention throughout: a matrix m maps the row
vector v to v @ m, so composition "f then g" is the product M_f @ M_g.
Subspaces are kept in reduced row echelon form so that equal subspaces
have byte-identical representations.
"""

from __future__ import annotations

import numpy as np

from ._backend import matmul_acc, reduce_mod, rref


def _words(cols: int) -> int:
    return (cols + 63) >> 6


def pack_rows(dense: np.ndarray, cols: int) -> np.ndarray:
    """Pack a (rows, cols) 0/1 array into (rows, words) uint64."""
    rows = dense.shape[0]
    w = _words(cols)
    if cols == 0 or rows == 0:
        return np.zeros((rows, w), np.uint64)
    by = np.packbits(dense.astype(np.uint8, copy=False), axis=1, bitorder="little")
    padded = np.zeros((rows, w * 8), np.uint8)
    padded[:, : by.shape[1]] = by
    return padded.view(np.uint64)


def unpack_rows(data: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of pack_rows; returns a (rows, cols) uint8 array."""
    rows = data.shape[0]
    if cols == 0 or rows == 0:
        return np.zeros((rows, cols), np.uint8)
    by = np.ascontiguousarray(data).view(np.uint8)
    return np.unpackbits(by, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
    """Dense bit-packed matrix over GF(2)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = np.zeros((rows, _words(cols)), np.uint64)
        assert data.shape == (rows, _words(cols))
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.set(i, i, 1)
        return m

    @classmethod
    def from_dense(cls, dense, cols: int | None = None) -> "BitMatrix":
        dense = np.asarray(dense, np.uint8) & 1
        if dense.ndim != 2:
            raise ValueError("expected a 2-d array of bits")
        r, c = dense.shape
        if cols is None:
            cols = c
        return cls(r, cols, pack_rows(dense, cols))

    @classmethod
    def from_rows(cls, rows, cols: int) -> "BitMatrix":
        """Build from an iterable of rows given as bit lists or index sets."""
        rows = list(rows)
        dense = np.zeros((len(rows), cols), np.uint8)
        for i, row in enumerate(rows):
            if isinstance(row, (set, frozenset)):
                for j in row:
                    dense[i, j] ^= 1
            else:
                dense[i, : len(row)] = np.asarray(row, np.uint8) & 1
        return cls.from_dense(dense, cols)

    def to_dense(self) -> np.ndarray:
        return unpack_rows(self.data, self.cols)

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.data.copy())

    def get(self, i: int, j: int) -> int:
        return int((self.data[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1))

    def set(self, i: int, j: int, bit: int) -> None:
        mask = np.uint64(1) << np.uint64(j & 63)
        if bit:
            self.data[i, j >> 6] |= mask
        else:
            self.data[i, j >> 6] &= ~mask

    def flip(self, i: int, j: int) -> None:
        self.data[i, j >> 6] ^= np.uint64(1) << np.uint64(j & 63)

    def row(self, i: int) -> "BitMatrix":
        return BitMatrix(1, self.cols, self.data[i : i + 1].copy())

    def row_bits(self, i: int) -> np.ndarray:
        """Indices of set bits in row i."""
        return np.nonzero(unpack_rows(self.data[i : i + 1], self.cols)[0])[0]

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self):
        return f"BitMatrix({self.rows}x{self.cols})"

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        assert self.rows == other.rows and self.cols == other.cols
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = np.zeros((self.rows, _words(other.cols)), np.uint64)
        if self.rows and self.cols and other.cols:
            matmul_acc(self.data, self.cols, other.data, out)
        return BitMatrix(self.rows, other.cols, out)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T, self.rows)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        assert self.cols == other.cols
        return BitMatrix(
            self.rows + other.rows, self.cols, np.vstack([self.data, other.data])
        )

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        assert self.rows == other.rows
        left = unpack_rows(self.data, self.cols)
        right = unpack_rows(other.data, other.cols)
        return BitMatrix.from_dense(np.hstack([left, right]))

    def col_slice(self, start: int, stop: int) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense()[:, start:stop])

    def row_slice(self, start: int, stop: int) -> "BitMatrix":
        return BitMatrix(stop - start, self.cols, self.data[start:stop].copy())

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        dense = np.kron(self.to_dense(), other.to_dense())
        if dense.size == 0:
            dense = dense.reshape(self.rows * other.rows, self.cols * other.cols)
        return BitMatrix.from_dense(dense, self.cols * other.cols)


def stack_all(mats, cols: int) -> BitMatrix:
    datas = [m.data for m in mats if m.rows]
    if not datas:
        return BitMatrix(0, cols)
    return BitMatrix(sum(m.rows for m in mats), cols, np.vstack(datas))


def rank(m: BitMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    work = m.data.copy()
    _, r = rref(work, m.cols, m.cols)
    return r


def row_space(m: BitMatrix) -> "Subspace":
    """Span of the rows, as a canonical Subspace of GF(2)^cols."""
    return Subspace.from_matrix(m)


def kernel(m: BitMatrix) -> "Subspace":
    """{v : v @ m = 0}, a subspace of GF(2)^rows."""
    if m.rows == 0:
        return Subspace.zero(0) if m.cols else Subspace.zero(0)
    aug = m.hstack(BitMatrix.identity(m.rows))
    work = aug.data.copy()
    pivots, r = rref(work, aug.cols, m.cols)
    out = BitMatrix(m.rows, aug.cols, work).col_slice(m.cols, aug.cols)
    null_rows = out.data[r:]
    return Subspace._from_rref_candidate(BitMatrix(m.rows - r, m.rows, null_rows.copy()))


class Solver:
    """Row-reduces [m | I] once, then solves v @ m = b repeatedly."""

    def __init__(self, m: BitMatrix):
        self.m = m
        aug = m.hstack(BitMatrix.identity(m.rows))
        work = aug.data.copy()
        pivots, r = rref(work, aug.cols, m.cols)
        self.aug = BitMatrix(m.rows, aug.cols, work)
        self.pivots = pivots[:r]
        self.rank = r

    def solve(self, b: BitMatrix):
        """One solution of v @ m = b per row of b, or None if unsolvable.

        Returns (solutions, ok) where ok is a bool per row; solutions
        hold the lexicographically-first echelon solution (free
        coefficients zero) wherever ok.
        """
        assert b.cols == self.m.cols
        batch = b.hstack(BitMatrix.zeros(b.rows, self.m.rows))
        if self.rank and batch.rows:
            reduce_mod(batch.data, self.aug.data, self.pivots, self.rank)
        rem = batch.col_slice(0, self.m.cols)
        sol = batch.col_slice(self.m.cols, batch.cols)
        ok = ~unpack_rows(rem.data, rem.cols).any(axis=1)
        return sol, ok

    def solve_one(self, b: BitMatrix):
        sol, ok = self.solve(b)
        return sol if bool(ok[0]) else None


class Subspace:
    """Subspace of GF(2)^ambient with a canonical RREF basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: BitMatrix, pivots: np.ndarray):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def _from_rref_candidate(cls, m: BitMatrix) -> "Subspace":
        work = m.data.copy()
        if m.rows and m.cols:
            pivots, r = rref(work, m.cols, m.cols)
        else:
            pivots, r = np.empty(0, np.int64), 0
        return cls(m.cols, BitMatrix(r, m.cols, work[:r].copy()), pivots[:r].copy())

    @classmethod
    def from_matrix(cls, m: BitMatrix) -> "Subspace":
        return cls._from_rref_candidate(m)

    @classmethod
    def from_rows(cls, rows, ambient: int) -> "Subspace":
        return cls.from_matrix(BitMatrix.from_rows(rows, ambient))

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.from_matrix(BitMatrix.identity(ambient))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, BitMatrix(0, ambient), np.empty(0, np.int64))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"

    def reduce(self, vectors: BitMatrix) -> BitMatrix:
        """Canonical coset representatives: vectors reduced mod the basis."""
        assert vectors.cols == self.ambient
        out = vectors.copy()
        if self.dim and out.rows:
            reduce_mod(out.data, self.basis.data, self.pivots, self.dim)
        return out

    def contains(self, vectors: BitMatrix) -> bool:
        return self.reduce(vectors).is_zero()

    def contains_space(self, other: "Subspace") -> bool:
        return self.contains(other.basis)

    def coords(self, vectors: BitMatrix) -> BitMatrix:
        """Coordinates in the RREF basis; raises if not a member."""
        red = self.reduce(vectors)
        if not red.is_zero():
            raise ValueError("vector not in subspace")
        dense = unpack_rows(vectors.data, self.ambient)
        cols = self.pivots.astype(int)
        coords = dense[:, cols] if self.dim else np.zeros((vectors.rows, 0), np.uint8)
        return BitMatrix.from_dense(coords, self.dim)

    def lift(self, coords: BitMatrix) -> BitMatrix:
        assert coords.cols == self.dim
        return coords @ self.basis

    def sum(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        return Subspace.from_matrix(self.basis.stack(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        stacked = self.basis.stack(other.basis)
        ker = kernel(stacked)
        coeff_a = ker.basis.col_slice(0, self.dim)
        return Subspace.from_matrix(coeff_a @ self.basis)


def preimage(m: BitMatrix, w: Subspace) -> Subspace:
    """{v : v @ m in w}."""
    if w.ambient != m.cols:
        raise ValueError(f"ambient {w.ambient} does not match cols {m.cols}")
    if m.rows == 0:
        return Subspace.zero(0)
    stacked = m.stack(w.basis)
    ker = kernel(stacked)
    proj = ker.basis.col_slice(0, m.rows)
    return Subspace.from_matrix(proj)


def image_of(sub: Subspace, m: BitMatrix) -> Subspace:
    """Image of a subspace of the row space domain under v -> v @ m."""
    assert sub.ambient == m.rows
    return Subspace.from_matrix(sub.basis @ m)


class Subquotient:
    """z / b for subspaces b <= z, with computable quotient coordinates.

    The section rows are coset representatives, reduced mod b and in
    RREF, so quotient coordinates are a pivot readoff.
    """

    __slots__ = ("z", "b", "section", "_pivots")

    def __init__(self, z: Subspace, b: Subspace):
        if z.ambient != b.ambient:
            raise ValueError("ambient mismatch")
        if not z.contains_space(b):
            raise ValueError("denominator is not contained in numerator")
        self.z = z
        self.b = b
        reduced = b.reduce(z.basis)
        work = reduced.data.copy()
        if reduced.rows and reduced.cols:
            pivots, r = rref(work, reduced.cols, reduced.cols)
        else:
            pivots, r = np.empty(0, np.int64), 0
        self.section = BitMatrix(r, z.ambient, work[:r].copy())
        self._pivots = pivots[:r].copy()

    @property
    def dim(self) -> int:
        return self.section.rows

    def coords(self, vectors: BitMatrix) -> BitMatrix:
        """Quotient coordinates of vectors of z; raises if not in z."""
        if not self.z.contains(vectors):
            raise ValueError("vector not in numerator subspace")
        red = self.b.reduce(vectors)
        dense = unpack_rows(red.data, red.cols)
        cols = self._pivots.astype(int)
        coords = dense[:, cols] if self.dim else np.zeros((vectors.rows, 0), np.uint8)
        out = BitMatrix.from_dense(coords, self.dim)
        # residual must vanish: red is in span(section) by construction
        if not (red + out @ self.section).is_zero():
            raise AssertionError("subquotient coordinates failed to resolve")
        return out

    def lift(self, coords: BitMatrix) -> BitMatrix:
        assert coords.cols == self.dim
        return coords @ self.section


def subquotient(z: Subspace, b: Subspace):
    """(dim, section) per the quotient contract; see Subquotient."""
    sq = Subquotient(z, b)
    return sq.dim, sq.section
