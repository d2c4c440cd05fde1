"""Exact integer combinatorics: binomial conventions, primality, determinants.

Two binomial conventions coexist deliberately.  `binomial` extends to
negative upper argument by (-1)^b * C(b-a-1, b), which is what power-series
expansions of (1+x^2)^{-e} need.  `truncated_binomial` is zero whenever the
arguments leave the classical triangle; it is the convention fixed for the
Hilbert-series coefficients, where C(negative, N-1) must vanish.
"""

from fractions import Fraction
from math import comb


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, extended to negative upper argument."""
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    return (-1) ** b * comb(b - a - 1, b)


def truncated_binomial(a: int, b: int) -> int:
    """Binomial coefficient that is 0 outside 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def integer_determinant(rows) -> int:
    """Exact determinant of a small square integer matrix (fraction-free)."""
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)
