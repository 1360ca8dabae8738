"""Dense exact linear algebra over F_p.

Entries live in numpy int64 arrays with explicit reduction after every
product, which is safe for p < 2**31.  Matrices over F_2 take a bitset fast
path (rows packed into Python ints) because the largest Bockstein blocks
are mod 2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_MODULUS = 2**31


@dataclass(frozen=True)
class MatrixFp:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        if not 2 <= self.p < MAX_MODULUS:
            raise ValueError(f"modulus {self.p} out of range")
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            arr = arr.reshape(arr.shape[0] if arr.ndim else 0, -1)
        object.__setattr__(self, "entries", np.mod(arr, self.p))

    @classmethod
    def from_rows(cls, p: int, rows, cols: int | None = None) -> "MatrixFp":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(p, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(p, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "MatrixFp":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.cols == 0:
            return np.zeros(self.rows, dtype=np.int64)
        # column-by-column accumulation keeps every product below 2**62
        out = np.zeros(self.rows, dtype=np.int64)
        for j in np.nonzero(v)[0]:
            out = (out + self.entries[:, j] * v[j]) % self.p
        return out


def _rref_mod2(m: MatrixFp):
    cols = m.cols
    rows = []
    for r in m.entries:
        val = 0
        for j in np.nonzero(r)[0]:
            val |= 1 << int(j)
        rows.append(val)
    pivots: list[int] = []
    reduced: list[int] = []
    for c in range(cols):
        bit = 1 << c
        pivot = next((i for i, r in enumerate(rows) if r & bit), None)
        if pivot is None:
            continue
        prow = rows.pop(pivot)
        rows = [r ^ prow if r & bit else r for r in rows]
        reduced = [r ^ prow if r & bit else r for r in reduced]
        reduced.append(prow)
        pivots.append(c)
    out = np.zeros((m.rows, cols), dtype=np.int64)
    for i, r in enumerate(reduced):
        for c in range(cols):
            if r >> c & 1:
                out[i, c] = 1
    return len(pivots), MatrixFp(2, out), pivots


def _rank_mod2(m: MatrixFp) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in m.entries:
        val = 0
        for j in np.nonzero(r)[0]:
            val |= 1 << int(j)
        while val:
            top = val.bit_length() - 1
            if top in pivots:
                val ^= pivots[top]
            else:
                pivots[top] = val
                rank += 1
                break
    return rank


def row_reduce(m: MatrixFp):
    """Return ``(rank, rref, pivot_columns)``."""
    if m.p == 2:
        return _rref_mod2(m)
    p = m.p
    a = m.entries.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return r, MatrixFp(p, a), pivots


def rank(m: MatrixFp) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.p == 2:
        return _rank_mod2(m)
    return row_reduce(m)[0]


def kernel_basis(m: MatrixFp) -> list[np.ndarray]:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    p = m.p
    r, rref, pivots = row_reduce(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(m.cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rref.entries[i, f]) % p
        basis.append(v)
    return basis


def image_membership(m: MatrixFp, v):
    """Return ``(True, w)`` with ``m w = v`` if v is in the column span, else ``(False, None)``."""
    v = np.asarray(v, dtype=np.int64) % m.p
    if v.shape != (m.rows,):
        raise ValueError(f"vector has length {v.shape}, expected {m.rows}")
    aug = MatrixFp(m.p, np.hstack([m.entries, v.reshape(-1, 1)]))
    rnk, rref, pivots = row_reduce(aug)
    if m.cols in pivots:
        return False, None
    w = np.zeros(m.cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        w[c] = rref.entries[i, m.cols]
    return True, w
