"""Summand decompositions of Frobenius push-forwards of line bundles on Q_n.

A single Frobenius step of a line bundle decomposes exactly: writing the
twist as t = d_N + j + p*c with 0 <= j < p, the line summand O(c - t') occurs
with multiplicity dim C_{d_N + t'p + j} for every t' with |t'p + j| <= d_N,
and the spinor part is S_n(1 + c) with multiplicity 2^[N/2] * gamma(j), which
vanishes exactly when j = 0.  For iterated Frobenius only presence is
certified: line summands of a pushed-forward line bundle satisfy an
if-and-only-if window, spinor summands a one-step window from either a line
or a spinor source, and everything else only a necessary window.  The
closure tracks a certain set (sandwiched below the true summand multiset)
and a possible set (above it); for s = 1 and a line start the two coincide
with the exact decomposition.

On even-dimensional quadrics a spinor summand always brings its partner
species along (there is an automorphism of the quadric swapping the two), so
spinor presence is recorded for both species at once.
"""

import enum
from dataclasses import dataclass

from .hilbert import QuadricContext, dim_C_raw, gamma_raw


class Species(enum.Enum):
    """Spinor species: S on odd quadrics, S+/S- on even ones."""

    S = "S"
    PLUS = "S+"
    MINUS = "S-"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class LineBundle:
    twist: int

    def __str__(self):
        return f"O({self.twist})"


@dataclass(frozen=True)
class SpinorBundle:
    species: Species
    twist: int

    def __str__(self):
        return f"{self.species}({self.twist})"


def summand_sort_key(s):
    if isinstance(s, LineBundle):
        return (0, -s.twist, "")
    return (1, -s.twist, s.species.value)


def spinor_species(n: int) -> tuple:
    """The species living on Q_n (one for odd n, two for even)."""
    return (Species.S,) if n % 2 else (Species.PLUS, Species.MINUS)


def species_rank(n: int) -> int:
    """Rank of a single spinor bundle on Q_n: 2^m on Q_{2m+1}, 2^{m-1} on Q_{2m}."""
    return 2 ** (n // 2) if n % 2 else 2 ** (n // 2 - 1)


def summand_rank(n: int, s) -> int:
    return 1 if isinstance(s, LineBundle) else species_rank(n)


def _check_n(ctx):
    if ctx.n < 3:
        raise ValueError(
            "decompositions are only computed for n >= 3; on smaller quadrics "
            "the Picard group is not generated by O(1) and the summand "
            "vocabulary changes")


def _check_species(n, species):
    if species not in spinor_species(n):
        raise ValueError(f"species {species} does not live on Q_{n}")


@dataclass(frozen=True)
class Decomposition:
    """Known direct-sum structure of a push-forward.

    `parts` maps summands to multiplicities; a multiplicity of None means
    presence-only.  `exact` says the multiset is complete with exact counts.
    """

    context: QuadricContext
    source: object
    steps: int
    exact: bool
    parts: tuple  # ((summand, multiplicity|None), ...), canonically sorted

    def as_dict(self):
        return dict(self.parts)

    def multiplicity(self, s):
        return self.as_dict().get(s, 0)

    def line_twists(self):
        return tuple(s.twist for s, _ in self.parts if isinstance(s, LineBundle))

    def spinor_parts(self):
        return tuple((s, m) for s, m in self.parts if isinstance(s, SpinorBundle))

    def total_rank(self):
        if not self.exact:
            raise ValueError("rank is only defined for exact decompositions")
        n = self.context.n
        return sum(m * summand_rank(n, s) for s, m in self.parts)


def _sorted_parts(parts: dict):
    return tuple(sorted(parts.items(), key=lambda kv: summand_sort_key(kv[0])))


def normalize_twist(ctx: QuadricContext, t: int) -> tuple:
    """Write t = d_N + j + p*c with 0 <= j < p; returns (j, c)."""
    j = (t - ctx.d_N) % ctx.p
    c = (t - ctx.d_N - j) // ctx.p
    return j, c


def decompose_one_step(ctx: QuadricContext, t: int) -> Decomposition:
    """Exact decomposition of the single-step push-forward of O(t)."""
    _check_n(ctx)
    if ctx.s != 1:
        raise ValueError("one-step decomposition needs a context with s = 1")
    n, p, N = ctx.n, ctx.p, ctx.N
    j, c = normalize_twist(ctx, t)
    d_N = ctx.d_N
    parts = {}
    tp = -((d_N + j) // p)  # smallest t' with t'p + j >= -d_N
    while tp * p + j <= d_N:
        if abs(tp * p + j) <= d_N:
            mult = dim_C_raw(d_N + tp * p + j, n, p)
            assert mult > 0
            parts[LineBundle(c - tp)] = mult
        tp += 1
    b = 2 ** (N // 2) * gamma_raw(j, N, p)
    if j != 0:
        assert b > 0
        for sp in spinor_species(n):
            parts[SpinorBundle(sp, 1 + c)] = b
    else:
        assert b == 0
    return Decomposition(ctx, LineBundle(t), 1, True, _sorted_parts(parts))


# -- presence windows -----------------------------------------------------------


def line_presence(ctx: QuadricContext, j: int, t: int) -> bool:
    """Whether O(-t) is a summand of the s-step push-forward of O(j)
    (an if-and-only-if window, any s >= 1)."""
    _check_n(ctx)
    return 0 <= t * ctx.q + j <= ctx.n * (ctx.q - 1)


def _check_one_step(ctx):
    if ctx.s != 1:
        raise ValueError("the spinor windows describe a single Frobenius step; "
                         "build an s = 1 context")


def spinor_window_line_source(ctx: QuadricContext, j: int, t: int) -> bool:
    """Whether the one-step push-forward of O(j) contains the spinor twist
    S_n(-t) (if and only if)."""
    _check_n(ctx)
    _check_one_step(ctx)
    p = ctx.p
    return ctx.d_N - p + 1 <= t * p + j <= ctx.d_N - 1


def spinor_window_spinor_source(ctx: QuadricContext, j: int, t: int) -> bool:
    """Whether the one-step push-forward of S_n(j) contains S_n(-t); exactly
    one t satisfies this window."""
    _check_n(ctx)
    _check_one_step(ctx)
    p = ctx.p
    return ctx.d_N - p + 1 <= t * p + j <= ctx.d_N


def necessary_window(ctx: QuadricContext, source: str, j: int, t: int) -> bool:
    """Necessary condition for O(-t) to appear in the s-step push-forward of
    O(j) (`source` "line") or S_n(j) (`source` "spinor").  Not sufficient for
    the spinor source."""
    _check_n(ctx)
    v = t * ctx.q + j
    if source == "line":
        return 0 <= v <= ctx.n * (ctx.q - 1)
    if source == "spinor":
        return 1 <= v <= ctx.n * (ctx.q - 1)
    raise ValueError(f"unknown source {source!r}")


# -- iterated closure -----------------------------------------------------------


@dataclass(frozen=True)
class Closure:
    """certain <= true summand multiset <= possible (as presence sets)."""

    context: QuadricContext
    start: object
    steps: int
    certain: tuple
    possible: tuple
    exact: bool

    def certain_dict(self):
        return dict(self.certain)

    def possible_dict(self):
        return dict(self.possible)


def _one_step_ctx(ctx):
    return QuadricContext(ctx.n, ctx.p, 1)


def _step_certain(ctx1, summand):
    n, p = ctx1.n, ctx1.p
    out = set()
    if isinstance(summand, LineBundle):
        a = summand.twist
        for t in _window_range(p, a, 0, n * (p - 1)):
            out.add(LineBundle(-t))
        for t in _window_range(p, a, ctx1.d_N - p + 1, ctx1.d_N - 1):
            for sp in spinor_species(n):
                out.add(SpinorBundle(sp, -t))
    else:
        a = summand.twist
        hits = _window_range(p, a, ctx1.d_N - p + 1, ctx1.d_N)
        assert len(hits) == 1  # the spinor-source window has a unique solution
        for sp in spinor_species(n):
            out.add(SpinorBundle(sp, -hits[0]))
    return out


def _step_possible(ctx1, summand):
    n, p = ctx1.n, ctx1.p
    out = _step_certain(ctx1, summand)
    if isinstance(summand, SpinorBundle):
        for t in _window_range(p, summand.twist, 1, n * (p - 1)):
            out.add(LineBundle(-t))
    return out


def _window_range(p, j, lo, hi):
    """All integers t with lo <= t*p + j <= hi."""
    t_lo = -((j - lo) // p)
    return [t for t in range(t_lo, (hi - j) // p + 1) if lo <= t * p + j <= hi]


def summand_closure(ctx: QuadricContext, s=None, start=None) -> Closure:
    """Iterate the one-step presence rules s times from `start`.

    Line starts with s = 1 return the exact decomposition on both sides.
    Spinor starts are normalized to the full spinor sum S_n (both species on
    even quadrics), which is the only spinor source the one-step windows
    speak about.  Multiplicities beyond the exact case are presence-only.
    """
    _check_n(ctx)
    s = ctx.s if s is None else s
    if s < 1:
        raise ValueError("need at least one Frobenius step")
    start = LineBundle(0) if start is None else start
    ctx1 = _one_step_ctx(ctx)

    if isinstance(start, SpinorBundle):
        _check_species(ctx.n, start.species)
        seed = {SpinorBundle(sp, start.twist) for sp in spinor_species(ctx.n)}
    else:
        seed = {start}

    if s == 1 and isinstance(start, LineBundle):
        dec = decompose_one_step(ctx1, start.twist)
        return Closure(ctx, start, 1, dec.parts, dec.parts, True)

    certain, possible = set(seed), set(seed)
    for _ in range(s):
        certain = set().union(*(_step_certain(ctx1, x) for x in certain))
        possible = set().union(*(_step_possible(ctx1, x) for x in possible))
    pres = lambda items: tuple(  # noqa: E731
        (x, None) for x in sorted(items, key=summand_sort_key))
    assert certain <= possible
    return Closure(ctx, start, s, pres(certain), pres(possible), False)
