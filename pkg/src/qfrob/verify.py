"""Named verification suites.

Each suite checks one statement on a parameter grid and returns per-case
pass/fail results plus informational notes.  The same functions back the
`qfrob verify` subcommand and the acceptance tests; grids default to the
acceptance ranges.  Cases are independent, so a suite can evaluate them in
parallel; results are collected and emitted in deterministic order.
"""

from dataclasses import dataclass, field, replace
from itertools import product

from . import cohomology, graded_pieces, hilbert, matfac, pushforward
from .cohomology import TiltingDecision
from .hilbert import QuadricContext
from .pushforward import LineBundle, SpinorBundle


@dataclass(frozen=True)
class VerifyOptions:
    n_values: tuple = (3, 4)           # quadric dimensions for Hilbert oracles
    p_values: tuple = (3, 5)           # characteristics
    q_values: tuple = (3, 5, 9)        # prime powers for residue-sum checks
    N_max: int = 8                     # variable-count bound for gamma checks
    m_max: int = 6                     # matrix-factorization level bound
    pullback_m_max: int = 4
    pullback_q: tuple = (3, 9)
    emj_max: int = 6                   # e, m, j sweep bound for the determinant
    det_p_values: tuple = (3, 5, 7, 11)
    decomposition_n: tuple = (3, 4, 5, 6)
    decomposition_p: tuple = (3, 5, 7)
    s_values: tuple = (1, 2, 3)
    max_columns: int = graded_pieces.DEFAULT_MAX_COLUMNS


@dataclass(frozen=True)
class Case:
    case_id: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    cases: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.cases)

    @property
    def counts(self):
        good = sum(1 for c in self.cases if c.ok)
        return good, len(self.cases) - good


# -- Hilbert-function suites -----------------------------------------------------


def _suite_pn(opts):
    """Total dimension 2q^N and the residue sums 2q^{N-1} of dim A."""
    cases = []
    for N, q in product(range(1, 7), opts.q_values):
        support = hilbert.a_support(N, q)
        total = sum(hilbert.dim_A_raw(i, N, q) for i in support)
        ok = total == 2 * q ** N
        detail = f"total {total} vs 2q^N={2 * q ** N}"
        for r in range(q):
            s = sum(hilbert.dim_A_raw(i, N, q) for i in support if i % q == r)
            if s != 2 * q ** (N - 1):
                ok = False
                detail = f"residue {r}: {s} != {2 * q ** (N - 1)}"
                break
        cases.append(Case(f"N={N},q={q}", ok, detail))
    return cases, []


def _suite_bl_cl(opts):
    """gamma: vanishing at 0, symmetry, positivity, closed forms, recursion."""
    cases = []
    for N, q in product(range(1, opts.N_max + 1), (3, 5, 7, 9)):
        problems = []
        if hilbert.gamma_raw(0, N, q) != 0:
            problems.append("gamma(0) != 0")
        for i in range(1, q):
            g = hilbert.gamma_raw(i, N, q)
            if g <= 0:
                problems.append(f"gamma({i}) = {g} not positive")
            if g != hilbert.gamma_raw(q - i, N, q):
                problems.append(f"gamma({i}) != gamma({q - i})")
        for i in range(1, (q - 1) // 2 + 1):
            a = hilbert.gamma_closed_raw(i, N, q)
            b = hilbert.gamma_raw(i, N, q)
            if a != b:
                problems.append(f"closed({i}) = {a} != {b}")
        if N >= 2:
            h = (q - 1) // 2
            for i in range(0, q):
                lhs = 2 * hilbert.gamma_raw(i, N, q)
                rhs = sum(hilbert.gamma_raw(i + j, N - 1, q) for j in range(-h, h + 1))
                if lhs != rhs:
                    problems.append(f"recursion fails at i={i}")
        cases.append(Case(f"N={N},q={q}", not problems, "; ".join(problems[:3])))
    return cases, []


def _suite_sum_b(opts):
    """Residue sums of dim B against p^n + 2^n * gamma."""
    cases = []
    for n, p in product((3, 4, 5), opts.p_values):
        ctx = QuadricContext(n, p)
        bad = []
        for l in range(p):
            lhs, rhs = hilbert.sum_B_check(ctx, l)
            if lhs != rhs:
                bad.append(f"l={l}: {lhs} != {rhs}")
        cases.append(Case(f"n={n},p={p}", not bad, "; ".join(bad)))
    notes = []
    ctx = QuadricContext(3, 3)
    triple = tuple(hilbert.sum_B_check(ctx, l)[0] for l in range(3))
    notes.append(f"worked residue sums at n=3, p=3: {triple}")
    return cases, notes


def _hilbert_oracle_case(n, p):
    ctx = QuadricContext(n, p)
    mismatches = []
    for algebra in ("A", "B", "C"):
        rng = hilbert.support(ctx, algebra)
        for i in list(rng) + [rng.stop]:  # one degree past the support
            formula = {"A": hilbert.dim_A, "B": hilbert.dim_B,
                       "C": hilbert.dim_C}[algebra](ctx, i)
            brute = {"A": hilbert.brute_dim_A, "B": hilbert.brute_dim_B,
                     "C": hilbert.brute_dim_C}[algebra](ctx, i)
            if formula != brute:
                mismatches.append(f"{algebra}_{i}: {formula} != {brute}")
    return Case(f"n={n},p={p}", not mismatches, "; ".join(mismatches[:4]))


def _suite_hilb_b(opts):
    """Formula dim A/B/C against Macaulay brute force on every support degree."""
    cases = [_hilbert_oracle_case(n, p)
             for n, p in product(opts.n_values, opts.p_values)]
    return cases, []


def _suite_c_eq_b(opts):
    """Brute-force C_d = brute-force B_d for d <= d_N."""
    cases = []
    for n, p in product(opts.n_values, opts.p_values):
        ctx = QuadricContext(n, p)
        bad = []
        for d in range(ctx.d_N + 1):
            c = hilbert.brute_dim_C(ctx, d)
            b = hilbert.brute_dim_B(ctx, d)
            if c != b:
                bad.append(f"d={d}: C={c}, B={b}")
        cases.append(Case(f"n={n},p={p}", not bad, "; ".join(bad[:4])))
    return cases, []


# -- colon-ideal suites ------------------------------------------------------------


def _diff_params(opts):
    for p, N in product(opts.p_values, (1, 2, 3)):
        top = (N + 1) * (p - 1) // 2
        for e in range(p):
            for d in range(0, top - e + 1):
                yield p, N, e, d


def _suite_diff_new(opts):
    cases = []
    for p, N, e, d in _diff_params(opts):
        ok = graded_pieces.verify_diff_new(p, N, e, d, opts.max_columns)
        cases.append(Case(f"p={p},N={N},e={e},d={d}", ok))
    return cases, []


def _suite_diff(opts):
    cases = []
    for p, N, e, d in _diff_params(opts):
        ok = graded_pieces.verify_diff(p, N, e, d, opts.max_columns)
        cases.append(Case(f"p={p},N={N},e={e},d={d}", ok))
    return cases, []


# -- the elimination determinant ------------------------------------------------------


def combination_solvable(e, m, j):
    """Whether the elimination step genuinely solves for the first j+1
    unknowns: it does exactly when j < e (for j >= e the unknown has already
    dropped out and the transformed matrix is structurally singular)."""
    return j < e


def _suite_combination(opts):
    """Nonvanishing mod p of the elimination determinant where the system is
    solvable; determinant-vs-product comparison reported, never asserted."""
    cases = []
    degenerate = []
    disagreements = []
    undefined = 0
    for p in opts.det_p_values:
        for e, m, j in product(range(opts.emj_max + 1), repeat=3):
            cd = hilbert.combination_determinant(e, m, j, p)
            if e + m - 1 <= p - 1:
                if combination_solvable(e, m, j):
                    cases.append(Case(f"e={e},m={m},j={j},p={p}",
                                      cd.nonzero_mod_p,
                                      f"det={cd.det}"))
                elif not cd.nonzero_mod_p:
                    degenerate.append((e, m, j, p, cd.det))
            if cd.product is None:
                undefined += 1
            elif abs(cd.det) != abs(cd.product):
                disagreements.append((e, m, j, cd.det, cd.product))
    notes = [
        f"det-vs-product: {len(disagreements)} disagreements on defined points "
        f"(e.g. {disagreements[0][:3]}: det {disagreements[0][3]}, "
        f"product {disagreements[0][4]})" if disagreements else
        "det-vs-product: all defined points agree",
        f"product formula undefined (negative factorial) at {undefined} points",
        f"{len(degenerate)} swept points with e+m-1 <= p-1 are structurally "
        f"singular (j >= e, determinant 0 over the integers); reported, not "
        f"asserted",
    ]
    if degenerate:
        zero_over_z = all(d[4] == 0 for d in degenerate)
        notes.append(f"all structurally singular determinants vanish over Z: "
                     f"{zero_over_z}")
    return cases, notes


# -- matrix factorizations -------------------------------------------------------------


def _suite_matfac(opts):
    cases = []
    for m, variant in product(range(opts.m_max + 1), matfac.VARIANTS):
        pair = matfac.build(m, variant)
        ok = matfac.verify(pair) and matfac.entries_are_signed_variables(pair)
        cases.append(Case(f"m={m},{variant}", ok))
    for m, variant, q in product(range(opts.pullback_m_max + 1), matfac.VARIANTS,
                                 opts.pullback_q):
        pair = matfac.build(m, variant)
        pulled = matfac.frobenius_pullback(pair, q)
        ok = (matfac.verify(pulled)
              and pulled.form == pair.form.substitute_power(q))
        cases.append(Case(f"m={m},{variant},q={q}", ok))
    return cases, []


# -- decomposition suites ----------------------------------------------------------------


def _decomposition_case(n, p, j):
    ctx = QuadricContext(n, p)
    t = ctx.d_N + j
    dec = pushforward.decompose_one_step(ctx, t)
    problems = []
    if dec.total_rank() != p ** n:
        problems.append(f"rank {dec.total_rank()} != {p ** n}")
    # line multiplicities must match dim B away from the spinor twist, and
    # absorb the psi-twisted h^1 constant at it
    spin = dec.spinor_parts()
    copies = len(spin)
    b = spin[0][1] if spin else 0
    psi = cohomology.psi_spinor_h1_constant(n)
    parts = dec.as_dict()
    for tp in range(-(ctx.d_N // p) - 2, ctx.d_N // p + 3):
        a_t = parts.get(LineBundle(-tp), 0)
        want = hilbert.dim_B(ctx, ctx.d_N + tp * p + j)
        have = a_t + (copies * b * psi if tp == 0 else 0)
        if want != have:
            problems.append(f"t'={tp}: {have} != dim B {want}")
    # palindromic line profile at j = 0
    if j == 0:
        twists = dec.line_twists()
        mults = [parts[LineBundle(t_)] for t_ in sorted(twists)]
        if mults != mults[::-1]:
            problems.append("profile not palindromic")
    return Case(f"n={n},p={p},j={j}", not problems, "; ".join(problems[:3]))


def _suite_decomposition_rank(opts):
    cases = []
    ctx = QuadricContext(3, 3)
    d3 = pushforward.decompose_one_step(ctx, 3).as_dict()
    want3 = {LineBundle(1): 1, LineBundle(0): 25, LineBundle(-1): 1}
    cases.append(Case("spot:n=3,p=3,t=3", d3 == want3, f"{d3}"))
    d4 = pushforward.decompose_one_step(ctx, 4).as_dict()
    want4 = {LineBundle(1): 5, LineBundle(0): 14,
             SpinorBundle(pushforward.Species.S, 1): 4}
    cases.append(Case("spot:n=3,p=3,t=4", d4 == want4, f"{d4}"))
    for n, p in product(opts.decomposition_n, opts.decomposition_p):
        for j in range(p):
            cases.append(_decomposition_case(n, p, j))
    return cases, []


def _suite_dir_sum_lb(opts):
    """Spinor part empty iff the twist is congruent to d_N mod p."""
    cases = []
    for n, p in product(opts.decomposition_n, opts.decomposition_p):
        ctx = QuadricContext(n, p)
        bad = []
        for t in range(ctx.d_N - 2 * p, ctx.d_N + 2 * p + 1):
            dec = pushforward.decompose_one_step(ctx, t)
            lines_only = not dec.spinor_parts()
            if lines_only != ((t - ctx.d_N) % p == 0):
                bad.append(f"t={t}")
        cases.append(Case(f"n={n},p={p}", not bad, "; ".join(bad[:4])))
    return cases, []


# -- tilting ---------------------------------------------------------------------------------


def tilting_evidence(n, p, s):
    """Cross-validation data for the tilting verdict from the closures.

    Returns a dict with the certain/possible summand sets, the generation and
    quasi-exceptionality findings, any Ext obstruction between certain
    summands (an Ext^1 witness when one exists), and the verdict those facts
    support.
    """
    ctx = QuadricContext(n, p, s)
    cl = pushforward.summand_closure(ctx)
    certain = sorted(cl.certain_dict(), key=pushforward.summand_sort_key)
    possible = sorted(cl.possible_dict(), key=pushforward.summand_sort_key)
    obstruction = cohomology.quasi_exceptionality_obstruction(n, certain)
    qe_possible = cohomology.is_quasi_exceptional(n, possible)
    gen_certain = cohomology.generates_sufficiently(n, certain)
    if obstruction is not None:
        supported = TiltingDecision.NOT_QUASI_EXCEPTIONAL
    elif qe_possible and gen_certain:
        supported = TiltingDecision.TILTING
    elif qe_possible and cl.exact:
        supported = TiltingDecision.QUASI_EXCEPTIONAL_NOT_GENERATING
    else:
        supported = None
    return {
        "certain": certain,
        "possible": possible,
        "exact": cl.exact,
        "obstruction": obstruction,
        "quasi_exceptional_possible": qe_possible,
        "generates_certain": gen_certain,
        "supported_decision": supported,
    }


_PINNED_DECISIONS = {
    (3, 5, 1): TiltingDecision.TILTING,
    (4, 3, 2): TiltingDecision.TILTING,
    (4, 3, 3): TiltingDecision.NOT_QUASI_EXCEPTIONAL,
    (4, 5, 2): TiltingDecision.NOT_QUASI_EXCEPTIONAL,
    (5, 3, 2): TiltingDecision.NOT_QUASI_EXCEPTIONAL,
    (5, 5, 2): TiltingDecision.TILTING,
    (3, 3, 1): TiltingDecision.QUASI_EXCEPTIONAL_NOT_GENERATING,
}


def _tilting_case(n, p, s):
    decision = cohomology.tilting_decision(n, p, s)
    ev = tilting_evidence(n, p, s)
    problems = []
    if ev["supported_decision"] is not decision:
        problems.append(f"evidence supports {ev['supported_decision']}, "
                        f"decision says {decision}")
    if decision is TiltingDecision.NOT_QUASI_EXCEPTIONAL:
        ob = ev["obstruction"]
        if ob is None or ob[2] != 1:
            problems.append(f"no Ext^1 witness between certain summands: {ob}")
    pinned = _PINNED_DECISIONS.get((n, p, s))
    if pinned is not None and decision is not pinned:
        problems.append(f"expected {pinned}")
    return Case(f"n={n},p={p},s={s}", not problems,
                "; ".join(problems) or str(decision))


def _suite_tilting_grid(opts):
    cases = [_tilting_case(n, p, s)
             for n, p, s in product(opts.decomposition_n, opts.decomposition_p,
                                    opts.s_values)]
    return cases, []


SUITES = {
    "diff": _suite_diff,
    "diff-new": _suite_diff_new,
    "C=B": _suite_c_eq_b,
    "hilb-B": _suite_hilb_b,
    "sum-B": _suite_sum_b,
    "p^n": _suite_pn,
    "bl-cl": _suite_bl_cl,
    "combination": _suite_combination,
    "matfac": _suite_matfac,
    "decomposition-rank": _suite_decomposition_rank,
    "dir-sum-lb": _suite_dir_sum_lb,
    "tilting-grid": _suite_tilting_grid,
}


def run_suite(name, opts: VerifyOptions = None, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: {sorted(SUITES)}")
    opts = opts or VerifyOptions()
    if jobs > 1 and name in _PARALLEL_GRIDS:
        cases, notes = _run_parallel(name, opts, jobs)
    else:
        cases, notes = SUITES[name](opts)
    return SuiteResult(name, cases, notes)


def options_with(opts: VerifyOptions = None, **overrides) -> VerifyOptions:
    return replace(opts or VerifyOptions(), **overrides)


# Per-grid-point parallel evaluation for the suites whose cases are costly
# and independent.  Case identifiers are generated in deterministic order and
# results are reassembled in that order regardless of completion time.

def _grid_hilb_b(opts):
    return [("hilbert-oracle", (n, p))
            for n, p in product(opts.n_values, opts.p_values)]


def _grid_diff(opts, new):
    return [("diff-new" if new else "diff", params) for params in _diff_params(opts)]


_PARALLEL_GRIDS = {
    "hilb-B": _grid_hilb_b,
    "diff": lambda o: _grid_diff(o, new=False),
    "diff-new": lambda o: _grid_diff(o, new=True),
}


def _eval_point(point):
    kind, params = point
    if kind == "hilbert-oracle":
        return _hilbert_oracle_case(*params)
    p, N, e, d = params
    if kind == "diff-new":
        ok = graded_pieces.verify_diff_new(p, N, e, d)
    else:
        ok = graded_pieces.verify_diff(p, N, e, d)
    return Case(f"p={p},N={N},e={e},d={d}", ok)


def _run_parallel(name, opts, jobs):
    from concurrent.futures import ProcessPoolExecutor

    points = _PARALLEL_GRIDS[name](opts)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        cases = list(pool.map(_eval_point, points))
    return cases, []
