"""Sparse multivariate polynomials with exact coefficients.

Monomials are exponent tuples of a fixed length.  The global monomial order
is graded lexicographic, descending within a degree with x0 most significant;
`monomials_of_degree` enumerates in exactly that order, and every matrix in
the package indexes its columns by it, so echelon bases and JSON output are
bit-stable across runs.

Coefficients live in F_p for a prime modulus, or in Z when the modulus is 0.
The integer mode is used by the matrix factorizations, where the identity
phi*psi = f*I holds over Z and therefore over every F_p at once.
"""

from functools import lru_cache

from .combinat import is_prime

Monomial = tuple


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple:
    """All degree-d monomials in `nvars` variables, graded-lex descending."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        return ()
    if nvars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def bounded_monomials(nvars: int, d: int, bounds: tuple) -> tuple:
    """Degree-d monomials with exponent i below bounds[i] (0 = unbounded).

    Same graded-lex order as `monomials_of_degree`.
    """
    if len(bounds) != nvars:
        raise ValueError("one bound per variable required")
    if d < 0:
        return ()
    cap = bounds[0] - 1 if bounds[0] else d
    if nvars == 1:
        return ((d,),) if d <= cap else ()
    out = []
    for e in range(min(d, cap), -1, -1):
        for rest in bounded_monomials(nvars - 1, d - e, bounds[1:]):
            out.append((e,) + rest)
    return tuple(out)


def _validate_modulus(modulus):
    if modulus != 0 and not is_prime(modulus):
        raise ValueError(f"modulus must be 0 (integers) or prime, got {modulus}")


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("nvars", "modulus", "_terms")

    def __init__(self, nvars, terms=None, modulus=0):
        _validate_modulus(modulus)
        self.nvars = int(nvars)
        self.modulus = int(modulus)
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {self.nvars} variables")
            if self.modulus:
                coeff = coeff % self.modulus
            if coeff:
                clean[mono] = coeff
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars, modulus=0):
        return cls(nvars, {}, modulus)

    @classmethod
    def constant(cls, c, nvars, modulus=0):
        return cls(nvars, {(0,) * nvars: c}, modulus)

    @classmethod
    def variable(cls, i, nvars, modulus=0):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1}, modulus)

    @classmethod
    def monomial(cls, exps, nvars, coeff=1, modulus=0):
        return cls(nvars, {tuple(exps): coeff}, modulus)

    @classmethod
    def sum_of_squares(cls, nvars, modulus=0, start=0, stop=None):
        """x_start^2 + ... + x_{stop-1}^2 (defaults to all variables)."""
        stop = nvars if stop is None else stop
        terms = {}
        for i in range(start, stop):
            exps = [0] * nvars
            exps[i] = 2
            terms[tuple(exps)] = 1
        return cls(nvars, terms, modulus)

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), 0)

    def is_zero(self):
        return not self._terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        degrees = {sum(m) for m in self._terms}
        return len(degrees) <= 1

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.nvars == other.nvars
                and self.modulus == other.modulus
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.nvars, self.modulus, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for mono in sorted(self._terms, key=lambda m: (sum(m), m), reverse=True):
            c = self._terms[mono]
            factors = [f"x{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(mono) if e]
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            else:
                bits.append(f"{c}*" + "*".join(factors))
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def _compatible(self, other):
        if self.nvars != other.nvars or self.modulus != other.modulus:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars, self.modulus)
        self._compatible(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial(self.nvars, terms, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()},
                          self.modulus)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars, self.modulus)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.nvars,
                              {m: c * other for m, c in self._terms.items()},
                              self.modulus)
        self._compatible(other)
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial(self.nvars, terms, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def substitute_power(self, q: int):
        """Replace every variable x_i by x_i^q (a ring homomorphism)."""
        if not isinstance(q, int) or q < 1:
            raise ValueError("q must be a positive integer")
        if q == 1:
            return self
        return Polynomial(self.nvars,
                          {tuple(e * q for e in m): c for m, c in self._terms.items()},
                          self.modulus)
