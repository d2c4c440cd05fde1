"""Batch command-line front end.

Subcommands: hilbert, decompose, matfac, ext, tilting, verify.  All data
output is deterministic byte-for-byte for a fixed invocation: JSON is emitted
with sorted keys and stable element order, TSV is a lossy convenience view.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
formula/oracle disagreement.
"""

import argparse
import json
import re
import sys

from . import cohomology, hilbert, matfac, pushforward, verify
from .hilbert import FormulaOracleDisagreement, QuadricContext
from .pushforward import LineBundle, Species, SpinorBundle

SCHEMA = 1


class UsageError(Exception):
    pass


def _parse_range(text):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected LO..HI")
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _parse_int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


_DESCRIPTOR_RE = re.compile(r"(O|S\+|S-|S)\((-?\d+)\)")


def _parse_summand(text):
    m = _DESCRIPTOR_RE.fullmatch(text.strip())
    if not m:
        raise UsageError(
            f"bad summand {text!r}; expected O(t), S(t), S+(t) or S-(t)")
    kind, twist = m.group(1), int(m.group(2))
    if kind == "O":
        return LineBundle(twist)
    return SpinorBundle(Species(kind), twist)


def _summand_json(s, mult):
    if isinstance(s, LineBundle):
        out = {"kind": "line", "twist": s.twist}
    else:
        out = {"kind": "spinor", "species": s.species.value, "twist": s.twist}
    out["multiplicity"] = "unknown" if mult is None else mult
    return out


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _emit_tsv(rows):
    for row in rows:
        print("\t".join(str(x) for x in row))


# -- subcommands -------------------------------------------------------------


def _cmd_hilbert(args):
    ctx = QuadricContext(args.n, args.p, args.s)
    if args.algebra == "gamma":
        lo, hi = _parse_range(args.range) if args.range else (0, ctx.q - 1)
        rows = [(i, hilbert.gamma(ctx, i), "formula") for i in range(lo, hi + 1)]
    else:
        source = args.source
        if source == "formula" and args.algebra in ("B", "C") and ctx.s != 1:
            source = "brute-force"  # closed forms are proven for s = 1 only
        lo, hi = _parse_range(args.range) if args.range else (None, None)
        table = hilbert.hilbert_table(ctx, args.algebra, lo, hi, source)
        rows = [(i, v, table.source) for i, v in table.dims]
    if args.format == "tsv":
        _emit_tsv([("degree", "dim", "source")] + rows)
    else:
        _emit_json({"schema": SCHEMA, "command": "hilbert", "n": args.n,
                    "p": args.p, "s": args.s, "algebra": args.algebra,
                    "values": [{"degree": i, "dim": v, "source": src}
                               for i, v, src in rows]})
    return 0


def _cmd_decompose(args):
    ctx = QuadricContext(args.n, args.p, args.s)
    if ctx.s == 1:
        dec = pushforward.decompose_one_step(ctx, args.twist)
        summands = [_summand_json(s, m) for s, m in dec.parts]
        payload = {"schema": SCHEMA, "command": "decompose", "n": args.n,
                   "p": args.p, "s": args.s, "exact": True,
                   "source": {"kind": "line", "twist": args.twist},
                   "summands": summands,
                   "rank_check": {"total": dec.total_rank(),
                                  "expected": ctx.p ** ctx.n,
                                  "ok": dec.total_rank() == ctx.p ** ctx.n}}
        rows = [(s["kind"], s.get("species", ""), s["twist"], s["multiplicity"])
                for s in summands]
    else:
        cl = pushforward.summand_closure(ctx, start=LineBundle(args.twist))
        payload = {"schema": SCHEMA, "command": "decompose", "n": args.n,
                   "p": args.p, "s": args.s, "exact": False,
                   "source": {"kind": "line", "twist": args.twist},
                   "certain": [_summand_json(s, m) for s, m in cl.certain],
                   "possible": [_summand_json(s, m) for s, m in cl.possible]}
        rows = [("certain", str(s), "") for s, _ in cl.certain]
        rows += [("possible", str(s), "") for s, _ in cl.possible]
    if args.format == "tsv":
        _emit_tsv(rows)
    else:
        _emit_json(payload)
    return 0


def _poly_terms(f):
    terms = sorted(f.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    return [{"coeff": c, "exponents": list(m)} for m, c in terms]


def _cmd_matfac(args):
    pair = matfac.build(args.m, args.variant, args.p)
    if args.q != 1:
        pair = matfac.frobenius_pullback(pair, args.q)
    ok = matfac.verify(pair)
    payload = {"schema": SCHEMA, "command": "matfac", "m": args.m,
               "variant": args.variant, "modulus": args.p, "q": args.q,
               "size": pair.size, "verified": ok,
               "form": _poly_terms(pair.form),
               "phi": [[_poly_terms(e) for e in row] for row in pair.phi],
               "psi": [[_poly_terms(e) for e in row] for row in pair.psi]}
    if args.format == "tsv":
        rows = [("size", pair.size), ("verified", ok)]
        _emit_tsv(rows)
    else:
        _emit_json(payload)
    return 0 if ok else 1


def _cmd_ext(args):
    a = _parse_summand(args.a)
    b = _parse_summand(args.b)
    degrees = [args.i] if args.i is not None else list(range(args.n + 1))
    dims = {i: cohomology.ext_dim(args.n, a, b, i) for i in degrees}
    if args.format == "tsv":
        _emit_tsv([("i", "dim")] + sorted(dims.items()))
    else:
        _emit_json({"schema": SCHEMA, "command": "ext", "n": args.n,
                    "a": args.a, "b": args.b,
                    "ext": {str(i): d for i, d in dims.items()}})
    return 0


def _cmd_tilting(args):
    decision = cohomology.tilting_decision(args.n, args.p, args.s)
    ev = verify.tilting_evidence(args.n, args.p, args.s)
    ob = ev["obstruction"]
    payload = {
        "schema": SCHEMA, "command": "tilting",
        "n": args.n, "p": args.p, "s": args.s,
        "decision": decision.value,
        "evidence": {
            "certain": [_summand_json(s, None) for s in ev["certain"]],
            "possible": [_summand_json(s, None) for s in ev["possible"]],
            "exact": ev["exact"],
            "quasi_exceptional_possible": ev["quasi_exceptional_possible"],
            "generates_certain": ev["generates_certain"],
            "obstruction": None if ob is None else
                {"a": str(ob[0]), "b": str(ob[1]), "i": ob[2]},
            "supported_decision":
                None if ev["supported_decision"] is None
                else ev["supported_decision"].value,
        },
    }
    agrees = ev["supported_decision"] is decision
    if args.format == "tsv":
        _emit_tsv([("decision", decision.value), ("cross_validated", agrees)])
    else:
        _emit_json(payload)
    return 0 if agrees else 3


def _verify_options(args):
    overrides = {}
    if args.n_max is not None:
        ns = tuple(range(3, args.n_max + 1))
        overrides["n_values"] = ns
        overrides["decomposition_n"] = ns
    if args.p is not None:
        ps = _parse_int_list(args.p)
        overrides["p_values"] = ps
        overrides["decomposition_p"] = ps
        overrides["det_p_values"] = ps
    if args.q is not None:
        overrides["q_values"] = _parse_int_list(args.q)
    if args.m_max is not None:
        overrides["m_max"] = args.m_max
    if args.max_columns is not None:
        overrides["max_columns"] = args.max_columns
    return verify.options_with(**overrides)


def _cmd_verify(args):
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in verify.SUITES:
            raise UsageError(f"unknown suite {name!r}; "
                             f"choices: {sorted(verify.SUITES) + ['all']}")
    opts = _verify_options(args)
    failed = False
    results = [verify.run_suite(name, opts, jobs=args.jobs) for name in names]
    if args.format == "json":
        payload = {"schema": SCHEMA, "command": "verify", "suites": [
            {"suite": r.suite,
             "passed": r.passed,
             "cases": [{"case": c.case_id, "ok": c.ok, "detail": c.detail}
                       for c in r.cases],
             "notes": r.notes}
            for r in results]}
        _emit_json(payload)
        failed = any(not r.passed for r in results)
    else:
        for r in results:
            for c in r.cases:
                status = "PASS" if c.ok else "FAIL"
                detail = f"  {c.detail}" if (c.detail and not c.ok) else ""
                print(f"{status} [{r.suite}] {c.case_id}{detail}")
            for note in r.notes:
                print(f"NOTE [{r.suite}] {note}")
            good, bad = r.counts
            print(f"SUITE {r.suite}: {good} passed, {bad} failed")
            failed = failed or bad > 0
    return 1 if failed else 0


# -- argument parsing ----------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="qfrob",
        description="Exact computations around Frobenius push-forwards of "
                    "line bundles on smooth quadrics over odd-characteristic "
                    "prime fields.")
    sub = top.add_subparsers(dest="command", required=True)

    def ctx_flags(p, need_n=True):
        p.add_argument("--n", type=int, required=need_n, help="quadric dimension")
        p.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        p.add_argument("--s", type=int, default=1, help="Frobenius iterations")

    fmt = dict(choices=("json", "tsv"), default="json")

    p = sub.add_parser("hilbert", help="degree tables of the graded algebras")
    ctx_flags(p)
    p.add_argument("--algebra", choices=("A", "B", "C", "gamma"), required=True)
    p.add_argument("--range", help="degree range LO..HI (default: full support)")
    p.add_argument("--source", choices=("formula", "brute-force", "check"),
                   default="formula",
                   help="'check' runs both paths and fails on disagreement")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("decompose", help="summand decomposition of a push-forward")
    ctx_flags(p)
    p.add_argument("--twist", "--j", dest="twist", type=int, required=True,
                   help="twist of the pushed-forward line bundle")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("matfac", help="matrix factorizations of the quadric forms")
    p.add_argument("--m", type=int, required=True, help="recursion level")
    p.add_argument("--variant", choices=matfac.VARIANTS, default="standard")
    p.add_argument("--p", type=int, default=0,
                   help="coefficient modulus (0 = integers)")
    p.add_argument("--q", type=int, default=1,
                   help="apply the q-th power substitution to all entries")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_matfac)

    p = sub.add_parser("ext", help="Ext dimensions between two summands")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help="source summand, e.g. 'O(0)' or 'S+(-1)'")
    p.add_argument("--b", required=True, help="target summand")
    p.add_argument("--i", type=int, help="single cohomological degree")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("tilting", help="tilting verdict with cross-validation")
    ctx_flags(p)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_tilting)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True,
                   help=f"one of {sorted(verify.SUITES) + ['all']}")
    p.add_argument("--n-max", type=int, help="largest quadric dimension")
    p.add_argument("--p", help="comma-separated characteristics")
    p.add_argument("--q", help="comma-separated prime powers")
    p.add_argument("--m-max", type=int, help="largest factorization level")
    p.add_argument("--max-columns", type=int,
                   help="override the Macaulay column guard")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers for grid suites")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormulaOracleDisagreement as exc:
        print(f"formula/oracle disagreement: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
