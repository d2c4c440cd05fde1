"""Graded slices of ideals and quotients of S = F_p[x_0, ..., x_N].

The degree-d slice of an ideal (g_1, ..., g_r) is spanned by the products
m * g_i over monomials m of degree d - deg g_i; stacking their coefficient
vectors against the graded-lex monomial basis gives the Macaulay matrix, and
row reduction gives dimensions, quotient dimensions and colon slices.

`PowerQuotient` is the same computation in the coordinate system where pure
variable-power generators have been eliminated combinatorially first: columns
are the monomials not divisible by any generator power, rows are the remaining
generators' multiples projected there.  This is exactly the Macaulay matrix of
the image ideal in the monomial quotient ring, and it is what makes the
brute-force Hilbert oracles affordable at the top degrees, where the raw
ambient basis would have tens of thousands of columns.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernel
from .linalg import FpMatrix, subspace_contains, subspace_equal
from .polynomial import Polynomial, bounded_monomials, monomials_of_degree

DEFAULT_MAX_COLUMNS = 20000


def _check_generators(generators, allow_empty=True):
    gens = [g for g in generators]
    if not gens:
        if allow_empty:
            return gens, None, None
        raise ValueError("need at least one generator")
    nvars = gens[0].nvars
    p = gens[0].modulus
    if p == 0:
        raise ValueError("graded pieces need a prime modulus")
    for g in gens:
        if g.nvars != nvars or g.modulus != p:
            raise ValueError("generators live in different rings")
        if g.is_zero():
            raise ValueError("zero generator")
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g!r}")
    return gens, nvars, p


def _guard_columns(nvars, d, max_columns):
    ncols = len(monomials_of_degree(nvars, d))
    if ncols > max_columns:
        raise ValueError(
            f"degree-{d} slice in {nvars} variables has {ncols} columns, "
            f"above the cap {max_columns}; raise max_columns to override")
    return ncols


@lru_cache(maxsize=None)
def _index_of(nvars, d):
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


def _poly_rows(polys, nvars, d):
    """Coefficient rows of degree-d polynomials in the graded-lex basis."""
    index = _index_of(nvars, d)
    rows = np.zeros((len(polys), len(index)), dtype=np.int64)
    for i, f in enumerate(polys):
        for mono, coeff in f.items():
            rows[i, index[mono]] = coeff
    return rows


@dataclass(frozen=True)
class GradedPiece:
    """A subspace of S_d, stored as a reduced basis against the monomial basis."""

    degree: int
    nvars: int
    p: int
    ambient: tuple
    basis: FpMatrix

    @property
    def dimension(self):
        return self.basis.rows

    def contains(self, other: "GradedPiece") -> bool:
        self._match(other)
        return subspace_contains(self.basis, other.basis)

    def __eq__(self, other):
        if not isinstance(other, GradedPiece):
            return NotImplemented
        self._match(other)
        return subspace_equal(self.basis, other.basis)

    def _match(self, other):
        if (self.degree, self.nvars, self.p) != (other.degree, other.nvars, other.p):
            raise ValueError("graded pieces live in different ambient spaces")


def _piece(nvars, p, d, rows) -> GradedPiece:
    basis = FpMatrix(rows, p).reduce() if len(rows) else FpMatrix(
        np.zeros((0, len(monomials_of_degree(nvars, d))), dtype=np.int64), p)
    return GradedPiece(d, nvars, p, monomials_of_degree(nvars, d), basis)


def ideal_piece(generators, d, max_columns=DEFAULT_MAX_COLUMNS) -> GradedPiece:
    """Degree-d slice of the ideal generated by homogeneous polynomials.

    Generators of degree above d contribute nothing and are skipped.
    """
    gens, nvars, p = _check_generators(generators, allow_empty=False)
    _guard_columns(nvars, d, max_columns)
    products = []
    for g in gens:
        e = g.degree()
        if e > d:
            continue
        for mono in monomials_of_degree(nvars, d - e):
            products.append(Polynomial.monomial(mono, nvars, 1, p) * g)
    rows = _poly_rows(products, nvars, d) if products else []
    return _piece(nvars, p, d, rows)


def quotient_dim(generators, d, max_columns=DEFAULT_MAX_COLUMNS) -> int:
    """dim (S / (generators))_d = dim S_d - dim ideal slice.

    When some generators are pure variable powers the computation runs in the
    pre-reduced coordinate system of `PowerQuotient`, which gives the same
    number (cross-checked in the tests) without the raw column blow-up.
    """
    gens, nvars, p = _check_generators(generators, allow_empty=False)
    powers, extras = _split_power_generators(gens, nvars)
    if powers:
        pq = PowerQuotient(p, nvars, powers, tuple(extras))
        return pq.dim(d)
    ncols = _guard_columns(nvars, d, max_columns)
    return ncols - ideal_piece(gens, d, max_columns).dimension


def colon_piece(generators, g: Polynomial, d,
                max_columns=DEFAULT_MAX_COLUMNS) -> GradedPiece:
    """Slice {h in S_d : g*h in (generators)}, as the kernel of
    multiplication by g into the degree-(d + deg g) quotient."""
    gens, nvars, p = _check_generators(generators, allow_empty=False)
    if g.nvars != nvars or g.modulus != p:
        raise ValueError("colon element lives in a different ring")
    if g.is_zero() or not g.is_homogeneous():
        raise ValueError("colon element must be homogeneous and nonzero")
    e = g.degree()
    _guard_columns(nvars, d + e, max_columns)
    slice_basis = ideal_piece(gens, d + e, max_columns).basis
    ambient = monomials_of_degree(nvars, d)
    products = [Polynomial.monomial(mono, nvars, 1, p) * g for mono in ambient]
    image = _poly_rows(products, nvars, d + e)
    backend = _kernel.get_backend()
    slice_basis._ensure_rref()
    residues = backend.reduce_rows(slice_basis._rref, slice_basis._pivots, image, p)
    # row i of `residues` is the image of the i-th monomial of S_d in
    # S_{d+e}/I; the colon slice is the left kernel of that matrix
    kern = FpMatrix(residues.T, p).right_kernel()
    return _piece(nvars, p, d, kern.array().T)


# -- the two colon-ideal statements -----------------------------------------


def _power_generators(p, nvars, exponent, first=0):
    gens = []
    for i in range(first, nvars):
        exps = [0] * nvars
        exps[i] = exponent
        gens.append(Polynomial.monomial(exps, nvars, 1, p))
    return gens


def _diff_range_check(p, N, e, d):
    if not 0 <= e < p:
        raise ValueError(f"e={e} outside [0, p)")
    if d < 0 or d + e > (N + 1) * (p - 1) // 2:
        raise ValueError(
            f"degree d={d} with e={e} outside the proven range "
            f"d + e <= (N+1)(p-1)/2 = {(N + 1) * (p - 1) // 2}")


def verify_diff_new(p, N, e, d, max_columns=DEFAULT_MAX_COLUMNS) -> bool:
    """Whether ((x_0^p..x_N^p) : f^e)_d lies inside (x_0^p..x_N^p, f)_d,
    for f the sum of squares of all variables.  Parameters outside the
    proven window are rejected rather than extrapolated."""
    _diff_range_check(p, N, e, d)
    nvars = N + 1
    powers = _power_generators(p, nvars, p)
    f = Polynomial.sum_of_squares(nvars, p)
    colon = colon_piece(powers, f ** e, d, max_columns)
    target = ideal_piece(powers + [f], d, max_columns)
    return target.contains(colon)


def verify_diff(p, N, e, d, max_columns=DEFAULT_MAX_COLUMNS) -> bool:
    """Whether ((x_0^p..x_N^p) : f^e)_d equals (x_0^p..x_N^p, f^{p-e})_d
    as subspaces (not merely in dimension)."""
    _diff_range_check(p, N, e, d)
    nvars = N + 1
    powers = _power_generators(p, nvars, p)
    f = Polynomial.sum_of_squares(nvars, p)
    colon = colon_piece(powers, f ** e, d, max_columns)
    rhs = ideal_piece(powers + [f ** (p - e)], d, max_columns)
    return colon == rhs


# -- pre-reduced Macaulay slices ---------------------------------------------


def _split_power_generators(gens, nvars):
    """Separate pure powers x_i^k from the rest; keep the smallest power per
    variable (larger powers are redundant)."""
    bounds = [0] * nvars
    extras = []
    for g in gens:
        mono = _pure_power(g)
        if mono is None:
            extras.append(g)
        else:
            i, k = mono
            bounds[i] = k if bounds[i] == 0 else min(bounds[i], k)
    if not any(bounds):
        return None, gens
    return tuple(bounds), extras


def _pure_power(g):
    if len(g) != 1:
        return None
    (mono, _), = g.items()
    nz = [(i, e) for i, e in enumerate(mono) if e]
    if len(nz) != 1:
        return None
    return nz[0]


class PowerQuotient:
    """Graded slices of S modulo (variable powers) + (extra generators).

    `bounds[i] = k` encodes the generator x_i^k (0 = no power for x_i).
    Columns of every matrix are the monomials below the bounds, rows the
    projected multiples of the extra generators.  Echelon forms are cached
    per degree; everything downstream (dimensions, standard monomials,
    multiplication ranks) reuses them.
    """

    def __init__(self, p, nvars, bounds, extras=()):
        self.p = p
        self.nvars = nvars
        self.bounds = tuple(bounds)
        self.extras = tuple(extras)
        for g in self.extras:
            if g.nvars != nvars or g.modulus != p:
                raise ValueError("extra generators live in a different ring")
            if not g.is_homogeneous() or g.is_zero():
                raise ValueError("extra generators must be homogeneous and nonzero")
        self._echelons = {}

    def monomials(self, d):
        return bounded_monomials(self.nvars, d, self.bounds)

    @lru_cache(maxsize=None)
    def _index(self, d):
        return {m: i for i, m in enumerate(self.monomials(d))}

    def _rows(self, polys, d):
        index = self._index(d)
        rows = np.zeros((len(polys), len(index)), dtype=np.int64)
        for i, f in enumerate(polys):
            for mono, coeff in f.items():
                col = index.get(mono)
                if col is not None:
                    rows[i, col] = coeff
        return rows

    def echelon(self, d):
        """(echelon rows, pivot columns) of the projected ideal slice."""
        if d not in self._echelons:
            products = []
            for g in self.extras:
                e = g.degree()
                if e > d:
                    continue
                for mono in self.monomials(d - e):
                    products.append(Polynomial.monomial(mono, self.nvars, 1, self.p) * g)
            rows = self._rows(products, d)
            self._echelons[d] = _kernel.get_backend().echelon(rows, self.p, reduced=False)
        return self._echelons[d]

    def slice_rank(self, d):
        return len(self.echelon(d)[1])

    def dim(self, d):
        """dim of the full quotient S / (powers + extras) in degree d."""
        if d < 0:
            return 0
        return len(self.monomials(d)) - self.slice_rank(d)

    def standard_monomials(self, d):
        _, pivots = self.echelon(d)
        pivot_set = set(int(c) for c in pivots)
        return tuple(m for i, m in enumerate(self.monomials(d)) if i not in pivot_set)

    def multiplication_rank(self, g: Polynomial, d):
        """Rank of multiplication by homogeneous g from the degree-d quotient
        to the degree-(d + deg g) quotient."""
        e = g.degree()
        std = self.standard_monomials(d)
        if not std:
            return 0
        ech, pivots = self.echelon(d + e)
        products = [Polynomial.monomial(m, self.nvars, 1, self.p) * g for m in std]
        image = self._rows(products, d + e)
        backend = _kernel.get_backend()
        residues = backend.reduce_rows(ech, pivots, image, self.p)
        return backend.rank(residues, self.p)
