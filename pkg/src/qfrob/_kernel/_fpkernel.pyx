# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dense row reduction over a prime field, int64 entries.

Entries are left unreduced between pivot steps; a single elimination adds at
most (p-1)^2 to an entry, so with fewer than 2^40 pivots and p < 2^11 nothing
approaches the int64 limit.  Callers keep p small (p <= 2^11) and prime.
"""

import numpy as np


cdef inline long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def echelon_inplace(long long[:, ::1] m, long long p, bint reduced):
    """Row-reduce ``m`` mod p in place and return the pivot column list.

    Forward elimination always runs; with ``reduced`` the routine also
    back-eliminates above the pivots, so the first ``len(pivots)`` rows end up
    in reduced row echelon form.  All entries lie in [0, p) on return.
    """
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, k, prow
    cdef long long v, f, inv
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        prow = -1
        for i in range(r, rows):
            if m[i, c] % p != 0:
                prow = i
                break
        if prow < 0:
            continue
        if prow != r:
            for j in range(cols):
                v = m[r, j]
                m[r, j] = m[prow, j]
                m[prow, j] = v
        inv = _inv_mod(m[r, c] % p, p)
        for j in range(cols):
            m[r, j] = (m[r, j] % p) * inv % p
        # pivot row is now exactly reduced; rows below only need columns >= c
        for i in range(r + 1, rows):
            f = m[i, c] % p
            if f == 0:
                continue
            f = p - f
            for j in range(c, cols):
                m[i, j] += f * m[r, j]
        pivots.append(c)
        r += 1
    cdef Py_ssize_t npiv = len(pivots)
    cdef Py_ssize_t[::1] pv
    if reduced and npiv > 1:
        pivarr = np.asarray(pivots, dtype=np.intp)
        pv = pivarr
        for k in range(npiv - 1, 0, -1):
            c = pv[k]
            for i in range(k):
                f = m[i, c] % p
                if f == 0:
                    continue
                f = p - f
                for j in range(c, cols):
                    m[i, j] += f * m[k, j]
    for i in range(rows):
        for j in range(cols):
            m[i, j] = m[i, j] % p
    return pivots


def reduce_rows_inplace(long long[:, ::1] ech, long long[:] pivots,
                        long long[:, ::1] x, long long p):
    """Eliminate the rows of ``x`` against an echelon matrix in place.

    ``ech`` must be an echelon form with entries in [0, p) whose k-th row has
    its leading nonzero entry 1 at column ``pivots[k]`` and zeros to the left.
    Afterwards every row of ``x`` is congruent to the original modulo the row
    space of ``ech`` and vanishes on all pivot columns.
    """
    cdef Py_ssize_t nx = x.shape[0], cols = x.shape[1], npiv = pivots.shape[0]
    cdef Py_ssize_t i, j, k, c
    cdef long long f
    for i in range(nx):
        for k in range(npiv):
            c = pivots[k]
            f = x[i, c] % p
            if f == 0:
                continue
            f = p - f
            for j in range(c, cols):
                x[i, j] += f * ech[k, j]
        for j in range(cols):
            x[i, j] = x[i, j] % p
