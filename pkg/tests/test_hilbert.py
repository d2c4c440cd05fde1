"""Hilbert functions: closed forms against convolution and Macaulay oracles."""

from fractions import Fraction

import pytest

from qfrob.hilbert import (CombinationDeterminant, QuadricContext, alpha,
                           a_support, bc_support, brute_dim_A, brute_dim_B,
                           brute_dim_C, combination_determinant, dim_A, dim_B,
                           dim_B_raw, dim_C, dim_C_raw, gamma,
                           gamma_closed_raw, gamma_raw, hilbert_table, support,
                           sum_B_check)


def _series_coefficients(N, q, with_linear_factor, length):
    """Coefficients of ((1-t^q)/(1-t))^N, optionally times (1+t), by
    convolution; the independent oracle for alpha and dim A."""
    series = [1]
    for _ in range(N):
        series = [sum(series[i - k] for k in range(q) if 0 <= i - k < len(series))
                  for i in range(len(series) + q - 1)]
    if with_linear_factor:
        old = series
        series = [(old[i] if i < len(old) else 0)
                  + (old[i - 1] if 0 <= i - 1 < len(old) else 0)
                  for i in range(len(old) + 1)]
    series += [0] * max(0, length - len(series))
    return series[:length]


def test_alpha_against_convolution():
    for N, q in ((1, 3), (2, 3), (4, 3), (3, 5), (2, 9)):
        want = _series_coefficients(N, q, False, N * (q - 1) + 3)
        got = [alpha(i, N, q) for i in range(len(want))]
        assert got == want
    assert [alpha(i, 4, 3) for i in range(9)] == [1, 4, 10, 16, 19, 16, 10, 4, 1]
    assert alpha(0, 6, 9) == 1
    assert alpha(-1, 3, 3) == 0


def test_dim_A_against_convolution():
    for n, p, s in ((3, 3, 1), (4, 3, 1), (3, 5, 1), (2, 3, 2)):
        ctx = QuadricContext(n, p, s)
        want = _series_coefficients(ctx.N, ctx.q, True, ctx.N * (ctx.q - 1) + 4)
        got = [dim_A(ctx, i) for i in range(len(want))]
        assert got == want
    ctx = QuadricContext(3, 3)
    assert [dim_A(ctx, i) for i in range(10)] == [1, 5, 14, 26, 35, 35, 26, 14, 5, 1]


def test_total_and_residue_sums():
    for n, p, s in ((3, 3, 1), (4, 3, 1), (2, 3, 2), (3, 5, 1)):
        ctx = QuadricContext(n, p, s)
        q, N = ctx.q, ctx.N
        dims = [dim_A(ctx, i) for i in a_support(N, q)]
        assert sum(dims) == 2 * q ** N
        for r in range(q):
            assert sum(d for i, d in enumerate(dims) if i % q == r) == 2 * q ** (N - 1)


def test_dim_B_row_and_support():
    ctx = QuadricContext(3, 3)
    assert [dim_B(ctx, i) for i in range(7)] == [1, 5, 14, 25, 30, 21, 1]
    assert dim_B(ctx, -1) == 0 and dim_B(ctx, 7) == 0
    # both branches meet at i = d_N + p
    for n, p in ((3, 3), (4, 3), (3, 5), (5, 3)):
        d_N = n * (p - 1) // 2
        i = d_N + p
        alternating = sum((-1) ** j * dim_A(QuadricContext(n, p), i - j * p)
                          for j in range(i // p + 1))
        assert dim_B_raw(i, n, p) == alternating
    with pytest.raises(ValueError):
        dim_B(QuadricContext(3, 3, 2), 1)


def test_dim_C_row_symmetry_and_window():
    ctx = QuadricContext(3, 3)
    assert [dim_C(ctx, i) for i in range(7)] == [1, 5, 14, 25, 14, 5, 1]
    for n, p in ((3, 3), (4, 3), (3, 5)):
        d_N = n * (p - 1) // 2
        for i in range(-2, 2 * d_N + 3):
            assert dim_C_raw(i, n, p) == dim_C_raw(2 * d_N - i, n, p)
            if i <= d_N or i >= d_N + p:
                assert dim_C_raw(i, n, p) == dim_B_raw(i, n, p)
        assert dim_C_raw(2 * d_N + 1, n, p) == 0


def test_gamma_examples_and_symmetries():
    ctx = QuadricContext(3, 3)
    assert gamma(ctx, 0) == 0
    assert gamma(ctx, 1) == 1  # (-5 + 35 - 14) / 16
    for N, q in ((1, 3), (3, 3), (4, 3), (4, 5), (5, 9), (8, 7)):
        assert gamma_raw(0, N, q) == 0
        for i in range(1, q):
            assert gamma_raw(i, N, q) > 0
            assert gamma_raw(q - i, N, q) == gamma_raw(i, N, q)
        for i in range(-3, 3):
            assert gamma_raw(i + q, N, q) == -gamma_raw(i, N, q)
    # one-variable base case
    assert [gamma_raw(i, 1, 5) for i in range(5)] == [0, 1, 1, 1, 1]


def test_gamma_recursion_in_N():
    for N in range(2, 9):
        for q in (3, 5, 9):
            h = (q - 1) // 2
            for i in range(q):
                lhs = 2 * gamma_raw(i, N, q)
                rhs = sum(gamma_raw(i + j, N - 1, q) for j in range(-h, h + 1))
                assert lhs == rhs


def test_gamma_closed_forms():
    # worked values of the two recursions at q = 3
    assert gamma_closed_raw(1, 4, 3) == 1
    assert gamma_closed_raw(1, 3, 3) == 1
    for N in range(1, 9):
        for q in (3, 5, 7, 9):
            for i in range(1, (q - 1) // 2 + 1):
                assert gamma_closed_raw(i, N, q) == gamma_raw(i, N, q)
    with pytest.raises(ValueError):
        gamma_closed_raw(0, 4, 3)
    with pytest.raises(ValueError):
        gamma_closed_raw(2, 4, 3)


def test_gamma_closed_quadratic_case():
    """For three variables the closed form collapses to i(q-i)/2."""
    for q in (3, 5, 7, 9):
        for i in range(1, (q - 1) // 2 + 1):
            assert gamma_closed_raw(i, 3, q) == i * (q - i) // 2


def test_sum_B_identity():
    ctx = QuadricContext(3, 3)
    assert [sum_B_check(ctx, l) for l in range(3)] == [(27, 27), (35, 35), (35, 35)]
    for n in (3, 4, 5):
        for p in (3, 5):
            c = QuadricContext(n, p)
            for l in range(p):
                lhs, rhs = sum_B_check(c, l)
                assert lhs == rhs


# -- the elimination determinant ---------------------------------------------------


def test_combination_determinant_j0():
    cd = combination_determinant(2, 3, 0, 5)
    assert isinstance(cd, CombinationDeterminant)
    assert cd.det == 4  # C(e-1+m, e-1)
    assert cd.product == 6  # the closed product reads C(e+m-1, e) instead
    assert cd.nonzero_mod_p


def test_combination_determinant_matches_system_when_solvable():
    for e in range(1, 7):
        for m in range(0, 7):
            for j in range(0, e):
                cd = combination_determinant(e, m, j, 11)
                assert abs(cd.det) == abs(cd.system_det), (e, m, j)
                assert cd.det != 0


def test_combination_degenerate_region_is_singular_over_Z():
    """For j >= e the eliminated unknown no longer occurs and the matrix is
    singular outright; (1,1,1) is the smallest witness."""
    cd = combination_determinant(1, 1, 1, 3)
    assert cd.det == 0 and cd.system_det == 0
    assert cd.product == 1  # the closed product does not see the degeneration
    for (e, m, j) in ((0, 1, 0), (1, 1, 1), (2, 2, 2), (1, 2, 3)):
        assert combination_determinant(e, m, j, 5).det == 0


def test_combination_product_nonzero_mod_p_when_defined():
    for p in (3, 5, 7, 11):
        for e in range(7):
            for m in range(7):
                for j in range(7):
                    cd = combination_determinant(e, m, j, p)
                    if cd.product is not None and e + m - 1 <= p - 1:
                        value = cd.product
                        if isinstance(value, Fraction):
                            assert value.numerator % p != 0
                        else:
                            assert value % p != 0


# -- brute-force oracles -------------------------------------------------------------


def test_brute_oracles_small_grid():
    ctx = QuadricContext(3, 3)
    for i in a_support(ctx.N, ctx.q):
        assert brute_dim_A(ctx, i) == dim_A(ctx, i)
    for i in bc_support(ctx.n, ctx.q):
        assert brute_dim_B(ctx, i) == dim_B(ctx, i)
        assert brute_dim_C(ctx, i, "rank") == dim_C(ctx, i)
        assert brute_dim_C(ctx, i, "sequence") == dim_C(ctx, i)


def test_brute_oracle_beyond_support_is_zero():
    ctx = QuadricContext(3, 3)
    assert brute_dim_A(ctx, 10) == 0
    assert brute_dim_B(ctx, 7) == 0
    assert brute_dim_C(ctx, 7) == 0


def test_brute_oracle_s2_exploration():
    """The A formula holds for any prime power; check it against brute force
    at q = 9 where the B/C closed forms are refused."""
    ctx = QuadricContext(2, 3, 2)
    for i in range(0, 12):
        assert brute_dim_A(ctx, i) == dim_A(ctx, i)
    with pytest.raises(ValueError):
        dim_C(ctx, 0)


def test_hilbert_table_sources():
    ctx = QuadricContext(3, 3)
    t = hilbert_table(ctx, "A", source="check")
    assert t.source == "both-agree"
    assert t.value(2) == 14 and t.value(99) == 0
    assert list(support(ctx, "A")) == list(range(0, 10))
    with pytest.raises(ValueError):
        hilbert_table(ctx, "D")


def test_context_validation():
    with pytest.raises(ValueError):
        QuadricContext(3, 2)
    with pytest.raises(ValueError):
        QuadricContext(3, 9)
    with pytest.raises(ValueError):
        QuadricContext(1, 3)
    ctx = QuadricContext(3, 3, 2)
    assert ctx.q == 9 and ctx.d_N == 12 and ctx.d(ctx.N) == 12 and ctx.d(ctx.n) == 8
