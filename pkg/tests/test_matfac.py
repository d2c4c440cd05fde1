"""Matrix factorizations: construction, exact products, power substitution."""

import dataclasses

import pytest

from qfrob.matfac import (build, entries_are_signed_variables,
                          frobenius_pullback, spinor_presentation, verify)
from qfrob.polynomial import Polynomial


def test_base_cases():
    p0 = build(0, "standard")
    assert p0.size == 1 and repr(p0.form) == "x0^2"
    assert verify(p0)
    q0 = build(0, "primed")
    assert q0.size == 1 and repr(q0.form) == "x1*x2"
    assert verify(q0)


def test_level_one_standard():
    pair = build(1, "standard")
    phi = pair.phi
    assert repr(phi[0][0]) == "x0" and repr(phi[0][1]) == "x1"
    assert repr(phi[1][0]) == "x2" and repr(phi[1][1]) == "-1*x0"
    assert verify(pair)
    assert repr(pair.form) == "x0^2 + x1*x2"


def test_level_one_primed():
    pair = build(1, "primed")
    assert repr(pair.form) == "x1*x2 + x3*x4"
    assert verify(pair)


def test_size_doubling_and_structure():
    for variant in ("standard", "primed"):
        sizes = [build(m, variant).size for m in range(5)]
        assert sizes == [1, 2, 4, 8, 16]
        for m in range(5):
            assert entries_are_signed_variables(build(m, variant))


@pytest.mark.parametrize("variant", ["standard", "primed"])
def test_verify_up_to_level_six(variant):
    for m in range(7):
        assert verify(build(m, variant))


def test_corruption_is_detected():
    pair = build(1, "standard")
    rows = [list(r) for r in pair.phi]
    rows[0][0] = rows[0][0] + Polynomial.variable(1, pair.nvars, pair.modulus)
    bad = dataclasses.replace(pair, phi=tuple(tuple(r) for r in rows))
    assert not verify(bad)


def test_pullback_scales_exponents_not_powers():
    pair = build(1, "standard")
    pulled = frobenius_pullback(pair, 3)
    # the product is the substituted form, not the cube of the form
    assert repr(pulled.form) == "x0^6 + x1^3*x2^3"
    assert pulled.form == pair.form.substitute_power(3)
    assert pulled.form != pair.form ** 3
    assert verify(pulled)
    assert frobenius_pullback(pair, 1).form == pair.form
    with pytest.raises(ValueError):
        frobenius_pullback(pair, 0)


@pytest.mark.parametrize("q", [3, 9])
def test_pullback_verifies(q):
    for variant in ("standard", "primed"):
        for m in range(5):
            assert verify(frobenius_pullback(build(m, variant), q))


def test_prime_field_build():
    pair = build(2, "standard", modulus=3)
    assert pair.modulus == 3
    assert verify(pair)
    assert entries_are_signed_variables(pair)


def test_spinor_presentation_sizes():
    """The presenting matrix is square of size equal to the number of
    sections of the once-twisted spinor bundle."""
    from qfrob.cohomology import h0_spinor

    for n in (3, 4, 5, 6):
        pair, twist = spinor_presentation(n)
        assert twist == 1
        assert verify(pair)
        assert pair.size == h0_spinor(n, 1) == 2 ** ((n + 1) // 2)
    with pytest.raises(ValueError):
        spinor_presentation(2)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build(-1)
    with pytest.raises(ValueError):
        build(1, "twisted")
