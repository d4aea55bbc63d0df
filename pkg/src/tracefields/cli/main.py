"""Command-line interface: ``tracefields <verb> ...``.

Exit codes: 0 success or decided, 2 parse failure, 3 irreducibility
undetermined, 4 undetermined verdict, 5 precondition violation,
6 fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import __version__
from ..algebra.integers import factor_integer
from ..errors import (
    FactorizationTimeout,
    IrreducibilityUndetermined,
    NotPositiveDefinite,
    PolynomialParseError,
    PrimalityRangeError,
    ReducibleError,
    SearchEffortExceeded,
)
from ..fields import NumberField, field_from_poly, is_fundamental_disc, is_tame_at
from ..fields.field import FUNDAMENTAL_MODES
from ..isometry import is_isometric
from ..quadforms import EQUIVALENT, decide_theorem_general, rationally_equivalent
from ..spectra import compare_spectra
from ..traceforms import gram_mod, trace_gram, trace_zero_gram
from .polyparse import format_polynomial, parse_polynomial
from .scan import FieldCache, ScanConfig, run_scan
from .table import read_table
from .verify import FIXTURES, run_checks

EXIT_OK, EXIT_PARSE, EXIT_IRREDUCIBILITY, EXIT_UNDETERMINED, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4, 5, 6


class Precondition(Exception):
    """Input violates a verb's precondition (exit code 5)."""


def _field(text: str) -> NumberField:
    coeffs = parse_polynomial(text)
    return field_from_poly(coeffs, label=format_polynomial(coeffs))


def _factored(n: int) -> str:
    fac = factor_integer(n)
    return f"{n} = {fac}" if fac.factors else str(n)


def cmd_invariants(args) -> int:
    F = _field(args.polynomial)
    tz = trace_zero_gram(F) if F.degree >= 2 else None
    info = {
        "polynomial": F.label,
        "degree": F.degree,
        "disc": F.disc,
        "disc_factored": _factored(F.disc),
        "fundamental": is_fundamental_disc(F.disc, args.fundamental),
        "signature": list(F.signature),
        "index": F.index,
        "tameness": {str(p): is_tame_at(F, p) for p in F.ramified_primes},
        "trace_det": trace_gram(F).det,
        "trace_zero_det": tz.det if tz else None,
    }
    if args.json:
        print(json.dumps(info, sort_keys=True))
        return EXIT_OK
    print(f"polynomial      {info['polynomial']}")
    print(f"degree          {F.degree}")
    print(f"discriminant    {info['disc_factored']}")
    print(f"fundamental     {info['fundamental']} ({args.fundamental})")
    print(f"signature       {F.signature}")
    print(f"index           {F.index}")
    for p, t in info["tameness"].items():
        print(f"  prime {p:<10} {t}")
    print(f"det trace form  {info['trace_det']}")
    print(f"det trace-zero  {info['trace_zero_det']}")
    return EXIT_OK


def cmd_decide(args) -> int:
    F, L = _field(args.f), _field(args.g)
    verdict = decide_theorem_general(F, L)
    outcome, extra = verdict.outcome, []
    if outcome != EQUIVALENT:
        if F.is_totally_real and L.is_totally_real:
            iso = is_isometric(trace_gram(F), trace_gram(L), node_cap=args.effort)
            outcome = "equivalent" if iso else "not-equivalent"
            extra.append(f"definite isometry test: {'witness ' + str(iso.witness) if iso else iso.separator}")
            if verdict.outcome != EQUIVALENT:
                extra.append(f"pipeline outcome: {verdict.outcome}")
        else:
            A, B = trace_gram(F), trace_gram(L)
            ok, report = rationally_equivalent(A, B) if A.dim == B.dim else (False, {"dim": (A.dim, B.dim)})
            even = (gram_mod(A, 2)[1], gram_mod(B, 2)[1])
            if even[0] != even[1]:
                # "all inner products even" does not depend on the basis
                outcome = "not-equivalent"
                extra.append(f"separated by the mod-2 Gram flag: zero for F {even[0]}, for L {even[1]}")
            elif A.dim != B.dim or A.det != B.det or not ok:
                outcome = "not-equivalent"
                extra.append(f"separated by rational invariants: {_separator(A, B, report)}")
            else:
                outcome = "undetermined"
                extra.append(f"pipeline outcome: {verdict.outcome}")
    print(f"F: {F.label}   disc {F.disc}   signature {F.signature}")
    print(f"L: {L.label}   disc {L.disc}   signature {L.signature}")
    for step in verdict.proof_trace:
        mark = {True: "ok", False: "FAIL"}.get(step.result, step.result)
        print(f"  [{mark}] {step.step}: {step.criterion}")
    for note in verdict.notes + extra:
        print(f"  note: {note}")
    print(f"outcome: {outcome}")
    return EXIT_UNDETERMINED if outcome == "undetermined" else EXIT_OK


def _separator(A, B, report) -> str:
    if A.dim != B.dim:
        return f"dimension {A.dim} vs {B.dim}"
    if A.det != B.det:
        return f"determinant {A.det} vs {B.det}"
    for key in ("disc_class", "signature"):
        a, b = report[key]
        if a != b:
            return f"{key} {a} vs {b}"
    for v, (a, b) in report["hasse"].items():
        if a != b:
            return f"Hasse invariant at {v}: {a} vs {b}"
    return "none"


def cmd_tz_isometric(args) -> int:
    F, L = _field(args.f), _field(args.g)
    for K in (F, L):
        if not K.is_totally_real or K.degree < 2:
            raise Precondition(f"{K.label} is not a totally real field of degree >= 2; "
                               "its trace-zero form is not definite, use 'decide'")
    A, B = trace_zero_gram(F), trace_zero_gram(L)
    result = is_isometric(A, B, node_cap=args.effort)
    print(f"trace-zero Gram of F ({F.label}):\n{A}")
    print(f"trace-zero Gram of L ({L.label}):\n{B}")
    if result:
        print(f"isometric; witness U = {[list(r) for r in result.witness]}")
    else:
        print(f"not isometric; separated by {result.separator}")
    return EXIT_OK


def cmd_spectra(args) -> int:
    F, L = _field(args.f), _field(args.g)
    if F.degree != L.degree:
        raise Precondition("spectra are compared for fields of equal degree")
    cmp = compare_spectra(F, L, args.bound, seed=args.seed)
    print(f"compared {cmp.compared} primes up to {args.bound}")
    if cmp.consistent:
        print("consistent")
    else:
        a, b = cmp.types
        print(f"distinguished at {cmp.prime}:")
        print(f"  F: {a}")
        print(f"  L: {b}")
    return EXIT_OK


def cmd_scan(args) -> int:
    records, malformed = read_table(args.table)
    config = ScanConfig(
        fundamental=args.fundamental,
        max_disc=args.max_disc,
        require_tame=args.require_tame,
        effort=args.effort,
        seed=args.seed,
        jobs=args.jobs,
    )
    report = run_scan(records, config, FieldCache(args.cache), malformed)
    if args.output:
        report.write(args.output)
    else:
        print("\n".join(report.lines()))
    summary = report.summary
    err = sys.stderr
    print(f"groups {summary['groups']}, fields {summary['fields_grouped']}, pairs {summary['pairs']}", file=err)
    print("  " + ", ".join(f"{k} {summary[k]}" for k in
                           ("conjugate", "distinct-forms", "equivalent-forms-nonconjugate", "undetermined")), file=err)
    print(f"  skipped {summary['skipped']}, flagged {summary['flagged']}", file=err)
    for p in report.candidates:
        print(f"  CANDIDATE: {p['a']} / {p['b']} (disc {p['disc']})", file=err)
    for p in report.pairs:
        if p["outcome"] == "undetermined":
            print(f"  undetermined: {p['a']} / {p['b']}: {p['reason']}", file=err)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    checks = run_checks(args.only)
    width = max(len(f"{c.fixture}: {c.item}") for c in checks)
    failed = []
    for c in checks:
        name = f"{c.fixture}: {c.item}"
        status = "pass" if c.ok else "FAIL"
        print(f"{status}  {name:<{width}}  expected {c.expected!r}  computed {c.computed!r}")
        if not c.ok:
            failed.append(name)
    if failed:
        print(f"{len(failed)} mismatches; first: {failed[0]}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"all {len(checks)} checks passed")
    return EXIT_OK


def _max_disc(text: str) -> int:
    return int(float(text)) if any(c in text for c in "eE.") else int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=argparse.SUPPRESS,
                        help="seed for randomized factoring mod p (results do not depend on it)")
    common.add_argument("--effort", type=int, default=argparse.SUPPRESS,
                        help="node cap for the isometry search (default 10^7)")
    common.add_argument("--max-disc", type=_max_disc, default=argparse.SUPPRESS,
                        help="scan: bound on |disc| (default: per-degree table)")
    common.add_argument("--fundamental", choices=FUNDAMENTAL_MODES, default=argparse.SUPPRESS,
                        help="convention for fundamental discriminants")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="scan: worker processes")
    common.add_argument("--cache", default=argparse.SUPPRESS, help="scan: field cache file")

    parser = argparse.ArgumentParser(prog="tracefields", parents=[common],
                                     description="Integral trace forms of number fields.")
    parser.set_defaults(seed=0x5EED, effort=10**7, max_disc=None, fundamental="quadratic-style",
                        jobs=1, cache=None)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariants", parents=[common], help="discriminant, signature, index, tameness")
    p.add_argument("polynomial")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    for name, func, helptext in (
        ("decide", cmd_decide, "decide equivalence of integral trace forms"),
        ("tz-isometric", cmd_tz_isometric, "isometry of trace-zero forms (totally real fields)"),
        ("spectra", cmd_spectra, "compare splitting types prime by prime"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("f")
        p.add_argument("g")
        if name == "spectra":
            p.add_argument("--bound", type=int, default=1000)
        p.set_defaults(func=func)

    p = sub.add_parser("scan", parents=[common], help="pairwise scan of a field table")
    p.add_argument("table")
    p.add_argument("--output", "-o", help="write the JSON-lines report here instead of stdout")
    p.add_argument("--require-tame", action="store_true", help="only fields tame at every ramified prime")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the reference fixtures")
    p.add_argument("--only", nargs="*", choices=sorted(FIXTURES), help="restrict to these fixtures")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PolynomialParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IrreducibilityUndetermined as exc:
        print(f"irreducibility undetermined: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBILITY
    except (SearchEffortExceeded, FactorizationTimeout, PrimalityRangeError) as exc:
        print(f"undetermined: {exc}", file=sys.stderr)
        return EXIT_UNDETERMINED
    except (Precondition, ReducibleError, NotPositiveDefinite) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
