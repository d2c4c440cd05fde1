"""Pure-numpy fallback for the row-reduction kernel.

Same contract as the compiled backend: `echelon`, `rank` and `reduce_rows`
over a prime field, int64 matrices.  Row operations are vectorised per pivot,
which is fine for the small and mid-sized matrices of the test sweeps but
noticeably slower than the compiled kernel on the large Macaulay slices.
"""

import numpy as np


def _as_matrix(mat, p):
    m = np.array(mat, dtype=np.int64, copy=True)
    if m.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return m % p


def echelon(mat, p, reduced=True):
    """Return (R, pivots): echelon rows of `mat` mod p, zero rows dropped.

    With `reduced` the result is the (unique) reduced row echelon form of the
    row space.
    """
    m = _as_matrix(mat, p)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        nzb = np.flatnonzero(m[r + 1:, c])
        if nzb.size:
            idx = r + 1 + nzb
            m[idx] = (m[idx] - np.outer(m[idx, c], m[r])) % p
        pivots.append(c)
        r += 1
    if reduced:
        for k in range(len(pivots) - 1, 0, -1):
            c = pivots[k]
            above = np.flatnonzero(m[:k, c])
            if above.size:
                m[above] = (m[above] - np.outer(m[above, c], m[k])) % p
    return m[:len(pivots)], np.asarray(pivots, dtype=np.int64)


def rank(mat, p):
    _, pivots = echelon(mat, p, reduced=False)
    return len(pivots)


def reduce_rows(ech, pivots, x, p):
    """Reduce the rows of `x` against an echelon matrix, returning a copy."""
    out = _as_matrix(x, p)
    ech = np.asarray(ech, dtype=np.int64)
    for k, c in enumerate(pivots):
        nz = np.flatnonzero(out[:, c])
        if nz.size:
            out[nz] = (out[nz] - np.outer(out[nz, c], ech[k])) % p
    return out
