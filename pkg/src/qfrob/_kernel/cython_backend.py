"""Wrapper around the compiled row-reduction kernel."""

import numpy as np

from . import _fpkernel

# Deferred reduction in the compiled kernel accumulates up to
# min(rows, cols) * (p-1)^2 in an int64 entry; keep p small enough that this
# can never overflow for any matrix that fits in memory.
MAX_PRIME = 1 << 11


def _as_matrix(mat, p):
    if p >= MAX_PRIME:
        raise ValueError(f"compiled kernel supports p < {MAX_PRIME}, got {p}")
    m = np.array(mat, dtype=np.int64, copy=True, order="C")
    if m.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return m


def echelon(mat, p, reduced=True):
    m = _as_matrix(mat, p)
    if m.size == 0:
        return m[:0], np.zeros(0, dtype=np.int64)
    pivots = _fpkernel.echelon_inplace(m, p, reduced)
    return m[:len(pivots)], np.asarray(pivots, dtype=np.int64)


def rank(mat, p):
    _, pivots = echelon(mat, p, reduced=False)
    return len(pivots)


def reduce_rows(ech, pivots, x, p):
    out = _as_matrix(x, p)
    ech = np.ascontiguousarray(np.asarray(ech, dtype=np.int64))
    piv = np.ascontiguousarray(np.asarray(pivots, dtype=np.int64))
    if out.size == 0 or piv.size == 0:
        return out % p
    _fpkernel.reduce_rows_inplace(ech, piv, out, p)
    return out
