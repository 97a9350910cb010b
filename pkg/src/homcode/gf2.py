"""Dense GF(2) linear algebra on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np


def as_gf2(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.uint8) % 2
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A


def row_reduce(M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2).

    Returns ``(R, pivots)`` where ``R`` keeps only the nonzero rows and
    ``pivots[i]`` is the pivot column of row ``i``.
    """
    R = as_gf2(M).copy()
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        hits = np.nonzero(R[row:, col])[0]
        if hits.size == 0:
            continue
        p = row + hits[0]
        if p != row:
            R[[row, p]] = R[[p, row]]
        mask = R[:, col].astype(bool)
        mask[row] = False
        R[mask] ^= R[row]
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank(M) -> int:
    A = as_gf2(M)
    if A.size == 0:
        return 0
    return len(row_reduce(A)[1])


def nullspace(M) -> np.ndarray:
    """Basis (as rows) of ``{v : M v = 0}``, ordered by free column."""
    A = as_gf2(M)
    n = A.shape[1]
    R, pivots = row_reduce(A)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            if R[r, f]:
                basis[i, p] = 1
    return basis


def reduce_vector(R: np.ndarray, pivots: list[int], v) -> np.ndarray:
    """Reduce ``v`` against a reduced row-echelon basis."""
    w = np.asarray(v, dtype=np.uint8).copy() % 2
    for r, p in enumerate(pivots):
        if w[p]:
            w ^= R[r]
    return w


def in_span(M, v) -> bool:
    A = as_gf2(M)
    if A.size == 0:
        return not np.any(np.asarray(v) % 2)
    R, pivots = row_reduce(A)
    return not reduce_vector(R, pivots, v).any()


def same_span(A, B) -> bool:
    """True iff the row spaces of ``A`` and ``B`` coincide."""
    A = as_gf2(A)
    B = as_gf2(B)
    ra = rank(A) if A.size else 0
    rb = rank(B) if B.size else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([A, B])) == ra


def complement_basis(span_rows, candidates) -> np.ndarray:
    """Greedily pick candidate rows independent of ``span_rows`` and of each other."""
    S = as_gf2(span_rows) if np.size(span_rows) else None
    picked = []
    current = S
    r = rank(current) if current is not None else 0
    for c in as_gf2(candidates):
        trial = c.reshape(1, -1) if current is None else np.vstack([current, c])
        r2 = rank(trial)
        if r2 > r:
            picked.append(c)
            current, r = trial, r2
    if not picked:
        n = as_gf2(candidates).shape[1]
        return np.zeros((0, n), dtype=np.uint8)
    return np.array(picked, dtype=np.uint8)


def bits_to_int(v) -> int:
    out = 0
    for i in np.flatnonzero(np.asarray(v) % 2):
        out |= 1 << int(i)
    return out


def int_to_bits(x: int, n: int) -> np.ndarray:
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.uint8)


class IntEchelon:
    """Incremental echelon basis of bit-vectors stored as Python ints.

    Used by the distance search, where membership tests dominate.
    """

    def __init__(self, rows=()):
        self._rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self._rows)

    def reduce(self, x: int) -> int:
        while x:
            top = x.bit_length() - 1
            row = self._rows.get(top)
            if row is None:
                return x
            x ^= row
        return 0

    def add(self, x: int) -> bool:
        x = self.reduce(x)
        if not x:
            return False
        self._rows[x.bit_length() - 1] = x
        return True

    def contains(self, x: int) -> bool:
        return self.reduce(x) == 0
