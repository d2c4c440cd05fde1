"""Recursive matrix factorizations of the two quadric normal forms.

The standard family starts from the 1x1 pair (x0), (x0) and doubles in size
at each step, adding a fresh pair of variables; level m is a 2^m x 2^m pair
factoring x0^2 + x1*x2 + ... + x_{2m-1}*x_{2m}.  The primed family starts
from (x1), (x2) and factors x1*x2 + ... + x_{2m+1}*x_{2m+2} at level m.

Note the fresh-variable indexing in the primed recursion: the step from level
k to k+1 adjoins x_{2k+3}, x_{2k+4}.  Reusing x1, x2 there (a literal
transcription of the standard recursion's indices) would collide with the
base pair and produce 2*x1*x2 times the identity instead of a factorization;
the products below are verified exactly, over the integers by default.
"""

from dataclasses import dataclass

from .polynomial import Polynomial

VARIANTS = ("standard", "primed")


@dataclass(frozen=True)
class MFPair:
    """Square polynomial matrices with phi @ psi = psi @ phi = form * I."""

    m: int
    variant: str
    phi: tuple
    psi: tuple
    form: Polynomial

    @property
    def size(self):
        return len(self.phi)

    @property
    def nvars(self):
        return self.form.nvars

    @property
    def modulus(self):
        return self.form.modulus


def _var(i, nvars, modulus):
    return Polynomial.variable(i, nvars, modulus)


def build(m: int, variant: str = "standard", modulus: int = 0) -> MFPair:
    """Construct the level-m pair of the chosen variant.

    `modulus` 0 builds over the integers (the identity then holds over every
    prime field at once); a prime builds over F_p.
    """
    if m < 0:
        raise ValueError("level must be non-negative")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if variant == "standard":
        nvars = max(2 * m + 1, 1)
        phi = [[_var(0, nvars, modulus)]]
        psi = [[_var(0, nvars, modulus)]]
        fresh = lambda k: (2 * k + 1, 2 * k + 2)  # noqa: E731
        form = Polynomial.monomial((2,) + (0,) * (nvars - 1), nvars, 1, modulus)
        pair_start = 1
    else:
        nvars = 2 * m + 3
        phi = [[_var(1, nvars, modulus)]]
        psi = [[_var(2, nvars, modulus)]]
        fresh = lambda k: (2 * k + 3, 2 * k + 4)  # noqa: E731
        form = _var(1, nvars, modulus) * _var(2, nvars, modulus)
        pair_start = 2
    for k in range(m):
        a, b = fresh(k)
        xa, xb = _var(a, nvars, modulus), _var(b, nvars, modulus)
        size = len(phi)
        zero = Polynomial.zero(nvars, modulus)
        new_phi = _block(phi, psi, xa, xb, size, zero)
        new_psi = _block(psi, phi, xa, xb, size, zero)
        phi, psi = new_phi, new_psi
        form = form + xa * xb
    # sanity: the form is the advertised hyperbolic normal form
    expected_pairs = m if variant == "standard" else m + 1
    assert len(form) == expected_pairs + (1 if variant == "standard" else 0)
    return MFPair(m, variant, _freeze(phi), _freeze(psi), form)


def _block(top, bottom, xa, xb, size, zero):
    """[[top, xa*I], [xb*I, -bottom]]"""
    out = []
    for i in range(size):
        out.append(list(top[i]) + [xa if i == j else zero for j in range(size)])
    for i in range(size):
        out.append([xb if i == j else zero for j in range(size)]
                   + [-bottom[i][j] for j in range(size)])
    return out


def _freeze(rows):
    return tuple(tuple(row) for row in rows)


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)),
                 Polynomial.zero(a[0][0].nvars, a[0][0].modulus))
             for j in range(n)] for i in range(n)]


def verify(pair: MFPair) -> bool:
    """Exact check that phi*psi and psi*phi both equal form * identity."""
    n = pair.size
    form = pair.form
    zero = Polynomial.zero(form.nvars, form.modulus)
    for prod in (_matmul(pair.phi, pair.psi), _matmul(pair.psi, pair.phi)):
        for i in range(n):
            for j in range(n):
                want = form if i == j else zero
                if prod[i][j] != want:
                    return False
    return True


def frobenius_pullback(pair: MFPair, q: int) -> MFPair:
    """Replace every variable by its q-th power, in entries and form alike.

    The new pair factors form with all exponents scaled by q (not form^q).
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    sub = lambda f: f.substitute_power(q)  # noqa: E731
    return MFPair(pair.m, pair.variant,
                  tuple(tuple(sub(e) for e in row) for row in pair.phi),
                  tuple(tuple(sub(e) for e in row) for row in pair.psi),
                  sub(pair.form))


def spinor_presentation(n: int, modulus: int = 0) -> tuple:
    """The factorization pair presenting the once-twisted spinor sheaf on Q_n
    as the cokernel of its phi (psi gives the other species on even n),
    together with the twist tag.

    Returns (pair, twist) with twist = 1; the matrix size equals the number
    of sections of the once-twisted spinor bundle, which is how downstream
    consumers read ranks off the presentation.
    """
    if n < 3:
        raise ValueError("presentations are used for n >= 3")
    if n % 2:
        return build(n // 2 + 1, "standard", modulus), 1
    return build(n // 2, "primed", modulus), 1


def entries_are_signed_variables(pair: MFPair) -> bool:
    """Structural property of the recursion: every nonzero entry is a single
    variable with coefficient +-1."""
    for mat in (pair.phi, pair.psi):
        for row in mat:
            for entry in row:
                if entry.is_zero():
                    continue
                if len(entry) != 1:
                    return False
                (mono, coeff), = entry.items()
                if sum(mono) != 1:
                    return False
                if pair.modulus == 0 and coeff not in (1, -1):
                    return False
                if pair.modulus and coeff not in (1, pair.modulus - 1):
                    return False
    return True
