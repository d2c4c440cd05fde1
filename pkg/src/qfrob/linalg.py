"""Dense matrices over a prime field F_p.

Thin wrapper over the row-reduction kernel (compiled or numpy).  Matrices are
immutable int64 arrays with entries in [0, p); `reduce` returns the unique
reduced row echelon form with zero rows dropped, so row spaces compare by
array equality.
"""

import numpy as np

from . import _kernel
from .combinat import is_prime


class FpMatrix:
    """Immutable dense matrix over F_p."""

    __slots__ = ("p", "_m", "_rref", "_pivots")

    def __init__(self, entries, p):
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        m = np.array(entries, dtype=np.int64)
        if m.ndim == 1:
            m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
        if m.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        self.p = int(p)
        self._m = m % p
        self._m.setflags(write=False)
        self._rref = None
        self._pivots = None

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n, p):
        return cls(np.eye(n, dtype=np.int64), p)

    # -- inspection --------------------------------------------------------

    @property
    def rows(self):
        return self._m.shape[0]

    @property
    def cols(self):
        return self._m.shape[1]

    @property
    def shape(self):
        return self._m.shape

    def array(self):
        """A writable copy of the entries."""
        return self._m.copy()

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.shape == other.shape
                and bool(np.array_equal(self._m, other._m)))

    def __repr__(self):
        return f"FpMatrix({self._m.tolist()!r}, p={self.p})"

    def __matmul__(self, other):
        if not isinstance(other, FpMatrix) or other.p != self.p:
            raise ValueError("matrix product needs matching moduli")
        return FpMatrix(self._m @ other._m % self.p, self.p)

    # -- reduction ---------------------------------------------------------

    def _ensure_rref(self):
        if self._rref is None:
            backend = _kernel.get_backend()
            r, piv = backend.echelon(self._m, self.p, reduced=True)
            self._rref = r
            self._pivots = piv

    def reduce(self):
        """Reduced row echelon form (zero rows dropped).  Idempotent."""
        self._ensure_rref()
        out = FpMatrix(self._rref, self.p)
        out._rref = out._m.copy()
        out._pivots = self._pivots.copy()
        return out

    def pivot_columns(self):
        self._ensure_rref()
        return tuple(int(c) for c in self._pivots)

    def rank(self):
        self._ensure_rref()
        return len(self._pivots)

    def right_kernel(self):
        """Matrix whose columns are a basis of the right null space."""
        return kernel_basis(self)


def kernel_basis(matrix: FpMatrix) -> FpMatrix:
    """Columns form a basis of {v : M v = 0}; rank-nullity by construction."""
    p = matrix.p
    n = matrix.cols
    matrix._ensure_rref()
    rref, pivots = matrix._rref, list(matrix._pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[f, idx] = 1
        for k, c in enumerate(pivots):
            basis[c, idx] = (-int(rref[k, f])) % p
    return FpMatrix(basis, p)


def _check_ambient(a: FpMatrix, b: FpMatrix):
    if a.p != b.p:
        raise ValueError("subspace comparison needs matching moduli")
    if a.cols != b.cols:
        raise ValueError(f"ambient dimension mismatch: {a.cols} vs {b.cols}")


def subspace_equal(a: FpMatrix, b: FpMatrix) -> bool:
    """Whether the row spaces coincide (compared on canonical RREF bases)."""
    _check_ambient(a, b)
    return a.reduce() == b.reduce()


def subspace_contains(a: FpMatrix, b: FpMatrix) -> bool:
    """Whether the row space of `a` contains the row space of `b`."""
    _check_ambient(a, b)
    a._ensure_rref()
    backend = _kernel.get_backend()
    residue = backend.reduce_rows(a._rref, a._pivots, b._m, a.p)
    return not residue.any()
