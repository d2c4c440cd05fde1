"""Push-forward decompositions, presence windows, and summand closures."""

from itertools import product

import pytest

from qfrob.hilbert import QuadricContext, dim_C
from qfrob.pushforward import (Closure, LineBundle, Species, SpinorBundle,
                               decompose_one_step, line_presence,
                               necessary_window, normalize_twist,
                               spinor_window_line_source,
                               spinor_window_spinor_source, summand_closure)

S = Species.S
PLUS, MINUS = Species.PLUS, Species.MINUS


def test_normalize_twist():
    ctx = QuadricContext(3, 3)
    for t in range(-10, 11):
        j, c = normalize_twist(ctx, t)
        assert 0 <= j < 3 and t == ctx.d_N + j + 3 * c


def test_decompose_spot_values():
    ctx = QuadricContext(3, 3)
    d3 = decompose_one_step(ctx, 3)
    assert d3.as_dict() == {LineBundle(1): 1, LineBundle(0): 25, LineBundle(-1): 1}
    assert d3.total_rank() == 27 and not d3.spinor_parts()

    d4 = decompose_one_step(ctx, 4)
    assert d4.as_dict() == {LineBundle(1): 5, LineBundle(0): 14,
                            SpinorBundle(S, 1): 4}
    assert d4.total_rank() == 27


def test_decompose_rejects_small_n_and_s2():
    with pytest.raises(ValueError):
        decompose_one_step(QuadricContext(2, 3), 0)
    with pytest.raises(ValueError):
        decompose_one_step(QuadricContext(3, 3, 2), 0)


def test_rank_identity_grid():
    for n, p in product((3, 4, 5, 6), (3, 5, 7)):
        ctx = QuadricContext(n, p)
        for j in range(p):
            dec = decompose_one_step(ctx, ctx.d_N + j)
            assert dec.total_rank() == p ** n, (n, p, j)


def test_at_most_one_spinor_twist():
    for n, p in ((3, 3), (4, 3), (5, 5)):
        ctx = QuadricContext(n, p)
        for t in range(-2 * p, 2 * p + 1):
            twists = {s.twist for s, _ in decompose_one_step(ctx, t).spinor_parts()}
            assert len(twists) <= 1


def test_even_dimension_carries_both_species():
    ctx = QuadricContext(4, 3)
    dec = decompose_one_step(ctx, ctx.d_N + 1)
    species = {s.species for s, _ in dec.spinor_parts()}
    assert species == {PLUS, MINUS}
    mults = {m for _, m in dec.spinor_parts()}
    assert len(mults) == 1  # both species with the same multiplicity


def test_line_presence_window():
    ctx = QuadricContext(3, 3)
    assert [line_presence(ctx, 0, t) for t in (0, 1, 2, 3)] == [True, True, True, False]
    ctx92 = QuadricContext(3, 3, 2)
    assert line_presence(ctx92, 4, 0) is True
    # presence at s = 1 coincides with positivity of the line multiplicity
    for n, p in ((3, 3), (4, 5)):
        c1 = QuadricContext(n, p)
        for j in range(p):
            dec = decompose_one_step(c1, j)
            for t in range(-6, 7):
                assert line_presence(c1, j, t) == (LineBundle(-t) in dec.as_dict())


def test_line_multiplicities_are_c_dimensions():
    for n, p in ((3, 3), (4, 3), (3, 5)):
        ctx = QuadricContext(n, p)
        for j in range(p):
            dec = decompose_one_step(ctx, ctx.d_N + j)
            for summand, mult in dec.parts:
                if isinstance(summand, LineBundle):
                    tp = -summand.twist
                    assert mult == dim_C(ctx, ctx.d_N + tp * p + j)


def test_spinor_windows():
    ctx = QuadricContext(3, 3)
    assert [t for t in range(-4, 5) if spinor_window_line_source(ctx, 4, t)] == [-1]
    assert [t for t in range(-4, 5) if spinor_window_line_source(ctx, 0, t)] == []
    hits = [t for t in range(-4, 5) if spinor_window_spinor_source(ctx, 0, t)]
    assert hits == [1]
    # a spinor source always sees exactly one admissible twist
    for n, p in ((3, 3), (4, 3), (5, 5), (6, 7)):
        c = QuadricContext(n, p)
        for j in range(-2 * p, 2 * p):
            hits = [t for t in range(-3 * p, 3 * p)
                    if spinor_window_spinor_source(c, j, t)]
            assert len(hits) == 1, (n, p, j)


def test_spinor_windows_are_single_step():
    ctx2 = QuadricContext(3, 3, 2)
    with pytest.raises(ValueError):
        spinor_window_line_source(ctx2, 0, 0)
    with pytest.raises(ValueError):
        spinor_window_spinor_source(ctx2, 0, 0)


def test_spinor_multiplicity_lower_bound():
    """Whenever a spinor summand appears its multiplicity is at least
    2^[N/2] (the normalized alternating sum is at least one)."""
    for n, p in ((3, 3), (4, 3), (5, 3), (3, 5)):
        ctx = QuadricContext(n, p)
        for j in range(1, p):
            dec = decompose_one_step(ctx, ctx.d_N + j)
            for _, mult in dec.spinor_parts():
                assert mult >= 2 ** (ctx.N // 2)


def test_necessary_window():
    ctx = QuadricContext(4, 3, 2)
    assert necessary_window(ctx, "line", 0, 4) is False
    assert necessary_window(ctx, "line", 0, 0) is True
    # spinor sources exclude tq + j = 0
    c = QuadricContext(3, 3)
    assert necessary_window(c, "line", 0, 0) and not necessary_window(c, "spinor", 0, 0)
    with pytest.raises(ValueError):
        necessary_window(c, "sheaf", 0, 0)


def test_every_summand_obeys_the_necessary_window():
    for n, p in ((3, 3), (4, 5), (5, 3)):
        ctx = QuadricContext(n, p)
        for j in range(p):
            for summand, _ in decompose_one_step(ctx, j).parts:
                if isinstance(summand, LineBundle):
                    assert necessary_window(ctx, "line", j, -summand.twist)


def test_closure_s1_is_exact_decomposition():
    ctx = QuadricContext(3, 3)
    cl = summand_closure(ctx)
    assert isinstance(cl, Closure) and cl.exact
    assert dict(cl.certain) == dict(cl.possible) == \
        decompose_one_step(ctx, 0).as_dict()


def test_closure_spec_examples():
    # two paths meet in one spinor twist after two steps on the even quadric
    cl = summand_closure(QuadricContext(4, 3, 2))
    cert = set(cl.certain_dict())
    assert SpinorBundle(PLUS, -1) in cert and SpinorBundle(MINUS, -1) in cert
    assert all(not (isinstance(x, SpinorBundle) and x.twist == -2) for x in cert)
    # the third step picks up the second spinor twist
    cl3 = summand_closure(QuadricContext(4, 3, 3))
    spin3 = {x for x in cl3.certain_dict() if isinstance(x, SpinorBundle)}
    assert spin3 == {SpinorBundle(sp, t) for sp in (PLUS, MINUS) for t in (-1, -2)}

    spin52 = {x for x in summand_closure(QuadricContext(5, 3, 2)).certain_dict()
              if isinstance(x, SpinorBundle)}
    assert spin52 == {SpinorBundle(S, -1), SpinorBundle(S, -2)}

    spin352 = {x for x in summand_closure(QuadricContext(3, 5, 2)).certain_dict()
               if isinstance(x, SpinorBundle)}
    assert spin352 == {SpinorBundle(S, -1)}


def test_closure_monotone_and_ordered():
    for n, p in ((3, 3), (4, 3), (5, 5)):
        prev_certain = set()
        for s in (1, 2, 3):
            cl = summand_closure(QuadricContext(n, p, s))
            certain = set(cl.certain_dict())
            possible = set(cl.possible_dict())
            assert certain <= possible
            assert prev_certain <= certain  # the structure sheaf persists
            prev_certain = certain


def test_closure_lines_reproduce_direct_window():
    """Iterating the one-step line windows s times lands exactly on the
    direct s-step presence window, for every grid point."""
    for n, p, s in product((3, 4, 5, 6), (3, 5), (1, 2, 3)):
        ctx = QuadricContext(n, p, s)
        cl = summand_closure(ctx)
        closure_lines = {x.twist for x in cl.certain_dict()
                         if isinstance(x, LineBundle)}
        direct = {-t for t in range(-3 * n, 3 * n) if line_presence(ctx, 0, t)}
        assert closure_lines == direct, (n, p, s)


def test_closure_spinor_start():
    ctx = QuadricContext(3, 3, 1)
    cl = summand_closure(ctx, start=SpinorBundle(S, 0))
    cert = set(cl.certain_dict())
    assert cert == {SpinorBundle(S, -1)}
    poss = set(cl.possible_dict())
    assert SpinorBundle(S, -1) in poss and any(isinstance(x, LineBundle) for x in poss)
    with pytest.raises(ValueError):
        summand_closure(ctx, start=SpinorBundle(PLUS, 0))  # wrong parity
