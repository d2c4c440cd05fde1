"""Exact arithmetic layer: binomials, polynomials, F_p matrices."""

import random

import numpy as np
import pytest

from qfrob.combinat import binomial, integer_determinant, truncated_binomial
from qfrob.linalg import FpMatrix, kernel_basis, subspace_contains, subspace_equal
from qfrob.polynomial import Polynomial, bounded_monomials, monomials_of_degree


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(1, 3) == 0
    assert binomial(4, -1) == 0
    assert binomial(-2, 2) == 3  # (-1)^2 * C(3, 2)
    assert truncated_binomial(-2, 2) == 0
    assert truncated_binomial(7, 0) == 1


def test_binomial_negative_upper_matches_series_inverse():
    """Coefficients of (1+x)^{-e} from binomial(-e, j) invert (1+x)^e."""
    for e in range(1, 6):
        direct = [binomial(e, j) for j in range(12)]
        inverse = [binomial(-e, j) for j in range(12)]
        conv = [sum(direct[k] * inverse[n - k] for k in range(n + 1))
                for n in range(12)]
        assert conv == [1] + [0] * 11


def test_hockey_stick_identity():
    for a in range(0, 12):
        for k in range(0, a + 1):
            lhs = sum(binomial(j, k) for j in range(k, a + 1))
            assert lhs == binomial(a + 1, k + 1)


def test_integer_determinant():
    assert integer_determinant([[2]]) == 2
    assert integer_determinant([[1, 2], [3, 4]]) == -2
    assert integer_determinant([[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        integer_determinant([[1, 2]])


# -- monomial order -------------------------------------------------------------


def test_monomial_order_is_graded_lex_descending():
    monos = monomials_of_degree(3, 2)
    assert monos[0] == (2, 0, 0)
    assert monos[-1] == (0, 0, 2)
    assert list(monos) == sorted(monos, reverse=True)
    assert len(monos) == 6


def test_bounded_monomials_subsequence():
    bounds = (0, 3, 3)
    sub = bounded_monomials(3, 4, bounds)
    full = monomials_of_degree(3, 4)
    assert all(m in full for m in sub)
    assert [m for m in full if m[1] < 3 and m[2] < 3] == list(sub)


# -- polynomials ------------------------------------------------------------------


def test_polynomial_basics():
    x0 = Polynomial.variable(0, 3, 5)
    x1 = Polynomial.variable(1, 3, 5)
    f = (x0 + x1) ** 2
    assert f.coefficient((1, 1, 0)) == 2
    assert f.degree() == 2 and f.is_homogeneous()
    g = x0 * x0 - x1
    assert not g.is_homogeneous()
    assert (f - f).is_zero()
    assert repr(Polynomial.zero(2)) == "0"


def test_polynomial_modulus_reduction():
    x = Polynomial.variable(0, 1, 3)
    assert (x + x + x).is_zero()
    with pytest.raises(ValueError):
        Polynomial.variable(0, 1, 4)  # composite modulus
    with pytest.raises(ValueError):
        Polynomial.variable(0, 2, 3) + Polynomial.variable(0, 2, 5)


def test_ring_axioms_randomized():
    rng = random.Random(7)

    def rand_poly(nvars=3, p=5):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            mono = tuple(rng.randint(0, 3) for _ in range(nvars))
            terms[mono] = rng.randint(0, p - 1)
        return Polynomial(nvars, terms, p)

    for _ in range(50):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_substitute_power_is_ring_homomorphism():
    rng = random.Random(11)

    def rand_poly():
        terms = {tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(1, 6)
                 for _ in range(rng.randint(1, 4))}
        return Polynomial(3, terms, 7)

    for q in (1, 2, 3):
        for _ in range(30):
            f, g = rand_poly(), rand_poly()
            assert (f * g).substitute_power(q) == \
                f.substitute_power(q) * g.substitute_power(q)
            assert (f + g).substitute_power(q) == \
                f.substitute_power(q) + g.substitute_power(q)


def test_substitute_power_examples():
    x0 = Polynomial.variable(0, 2)
    x1 = Polynomial.variable(1, 2)
    assert (x0 + x1).substitute_power(3) == x0 ** 3 + x1 ** 3
    f = x0 ** 2 + x0 * x1
    assert f.substitute_power(1) == f
    # substitution of a square expands term by term, it is not the square of
    # the substituted linear form with cross terms dropped
    sq = (x0 + x1) ** 2
    assert sq.substitute_power(2) == x0 ** 2 * x0 ** 2 + 2 * (x0 ** 2 * x1 ** 2) + x1 ** 2 * x1 ** 2
    with pytest.raises(ValueError):
        f.substitute_power(0)


# -- matrices ----------------------------------------------------------------------


def test_reduce_idempotent():
    rng = np.random.default_rng(3)
    for p in (3, 5, 11):
        for _ in range(10):
            m = FpMatrix(rng.integers(0, p, size=(6, 9)), p)
            r1 = m.reduce()
            assert r1.reduce() == r1


def test_kernel_examples():
    assert kernel_basis(FpMatrix.identity(3, 3)).cols == 0
    assert kernel_basis(FpMatrix.zeros(2, 2, 5)).cols == 2


def test_rank_nullity_randomized():
    rng = np.random.default_rng(5)
    for p in (3, 5):
        for _ in range(20):
            m = FpMatrix(rng.integers(0, p, size=(5, 8)), p)
            k = kernel_basis(m)
            assert m.rank() + k.cols == m.cols
            assert not (m @ k).array().any()


def test_subspace_operations():
    e1 = FpMatrix([[1, 0, 0]], 5)
    assert subspace_equal(e1, FpMatrix([[2, 0, 0]], 5))
    assert not subspace_equal(e1, FpMatrix([[0, 1, 0]], 5))
    plane = FpMatrix([[1, 0, 0], [0, 1, 0]], 5)
    assert subspace_contains(plane, FpMatrix([[1, 1, 0]], 5))
    assert not subspace_contains(FpMatrix([[1, 1, 0]], 5), plane)
    with pytest.raises(ValueError):
        subspace_equal(e1, FpMatrix([[1, 0]], 5))


def test_matrix_validation():
    with pytest.raises(ValueError):
        FpMatrix([[1]], 6)
