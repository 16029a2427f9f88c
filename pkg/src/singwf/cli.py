"""Command-line interface.

Subcommands: analyze, weights, wellform, diff, verify.  Exit codes:
0 success, 1 verification failure (mismatching dataset records), 2 usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .analyze import analyze, verify_record
from .dataset import load_records
from .different import EXCEPTIONAL_HINT_CAVEAT, StdBoundary, diff_on_E, diff_over_wps
from .errors import SingwfError
from .parse import parse_polynomial, render
from .poly import VarList
from .weights import WeightAssignment, infer_weights, quasi_degree

DEFAULT_TABLES_ENV = "SINGWF_TABLES"


def dumps(payload: object) -> str:
    """Canonical JSON: 2-space indent, insertion key order.  Parsing and
    re-dumping with the same options reproduces the bytes."""
    return json.dumps(payload, indent=2)


def _parse_vars(text: str | None) -> VarList:
    if not text:
        return VarList.default4()
    return VarList.of(name.strip() for name in text.split(","))


def _parse_weights(text: str, poly) -> WeightAssignment:
    p = tuple(int(v) for v in text.split(","))
    return WeightAssignment(p, quasi_degree(poly, p))


def _parse_boundary(text: str | None, vars: VarList) -> StdBoundary | None:
    if not text:
        return None
    coeffs = {name: Fraction(0) for name in vars}
    for item in text.split(","):
        name, eq, value = item.partition("=")
        name = name.strip()
        if not eq or name not in coeffs:
            raise SingwfError(f"bad boundary entry {item!r}; expected var=coeff")
        coeffs[name] = Fraction(value.strip())
    return StdBoundary(tuple(coeffs[name] for name in vars))


def _divisor_text(divisor, n: int) -> str:
    if not divisor.entries:
        return "0"
    return " + ".join(f"{c} {s.label(n)}" for s, c in divisor.entries)


def _report_text(report) -> str:
    n = report.profile.n
    names = report.poly.vars.names
    lines = [
        f"input: {render(report.poly)}",
        f"weights: p = {report.weights.p}, d = {report.weights.d}",
        f"substitution orders: q = {report.profile.q}, Q = {report.profile.Q}",
        f"transformed: {render(report.g_tilde)} in P{report.profile.p_tilde}, degree {report.profile.d_tilde}"
        f" ({report.profile.iterations} substitution pass(es))",
        f"well-formed: {'yes' if report.well_formed else 'no'}",
    ]
    for i, j in report.profile.failing_pairs:
        lines.append(
            f"failing pair ({names[i]}, {names[j]}): q_{i + 1}{j + 1} = {report.profile.q_pair(i, j)}"
        )
    lines.append(f"Diff_E(0) = {_divisor_text(report.diff_e, n)}")
    lines.append(f"Diff_E/P(0) = {_divisor_text(report.diff_over, n)}")
    lines.append(f"D = {_divisor_text(report.D, n)}")
    lines.append(
        "D^ = " + " + ".join(f"{c} {{{name}=0}}" for name, c in zip(names, report.Dhat.c))
    )
    if report.cone is not None:
        note = " (ambiguous; smallest index used)" if report.cone.ambiguous else ""
        lines.append(
            f"linear cone in {names[report.cone.k]}: reduces to P{report.cone.weights}{note}"
        )
    else:
        lines.append("linear cone: no")
    lines.append(f"discrepancy: {report.discrepancy} ({report.discrepancy_tag})")
    if report.hint is not None:
        k, threshold = report.hint
        lines.append(
            f"exceptional candidate via {names[k]} (1 - 1/q >= {threshold}); {EXCEPTIONAL_HINT_CAVEAT}"
        )
    return "\n".join(lines)


def _cmd_analyze(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    poly = parse_polynomial(args.poly, vars)
    weights = _parse_weights(args.weights, poly) if args.weights else None
    report = analyze(poly, weights)
    print(dumps(report.to_json_dict()) if args.json else _report_text(report))
    return 0


def _cmd_weights(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    poly = parse_polynomial(args.poly, vars)
    w = infer_weights(poly)
    if args.json:
        print(dumps({"input": render(poly), "weights": {"p": list(w.p), "d": w.d}}))
    else:
        print(f"p = {w.p}, d = {w.d}")
    return 0


def _cmd_wellform(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    poly = parse_polynomial(args.poly, vars)
    weights = _parse_weights(args.weights, poly) if args.weights else None
    report = analyze(poly, weights)
    if args.json:
        payload = report.to_json_dict()
        keep = ("input", "weights", "q", "Q", "tilde", "wellFormed", "failingPairs", "fixpointIterations")
        print(dumps({key: payload[key] for key in keep}))
    else:
        print(_report_text(report))
    return 0


def _cmd_diff(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    poly = parse_polynomial(args.poly, vars)
    weights = _parse_weights(args.weights, poly) if args.weights else None
    report = analyze(poly, weights)
    boundary = _parse_boundary(args.boundary, vars)
    diff_e = diff_on_E(report.profile, boundary, g_tilde=report.g_tilde)
    diff_p = diff_over_wps(report.profile, boundary)
    n = report.profile.n
    if args.json:
        entry = lambda d: [
            {"stratum": s.label(n, ascii=True), "coeff": f"{c.numerator}/{c.denominator}"}
            for s, c in d.entries
        ]
        print(dumps({"input": render(poly), "diffE": entry(diff_e), "diffOverWps": entry(diff_p)}))
    else:
        print(f"Diff_E(b) = {_divisor_text(diff_e, n)}")
        print(f"Diff_E/P(b) = {_divisor_text(diff_p, n)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    paths = args.paths or [os.environ.get(DEFAULT_TABLES_ENV) or "tables"]
    records = []
    for path in paths:
        records.extend(load_records(path))
    if args.jobs and args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(verify_record, records))
    else:
        outcomes = []
        for record in records:
            outcome = verify_record(record)
            outcomes.append(outcome)
            if args.fail_fast and not outcome.ok:
                break
    failed = [o for o in outcomes if not o.ok]
    if args.json:
        payload = {
            "records": [
                {
                    "id": o.record_id,
                    "ok": o.ok,
                    "mismatches": list(o.mismatches),
                    "seconds": round(o.seconds, 6),
                }
                for o in outcomes
            ],
            "total": len(outcomes),
            "failed": len(failed),
        }
        print(dumps(payload))
    else:
        for o in outcomes:
            if o.ok:
                print(f"ok   {o.record_id} ({o.seconds * 1000:.1f} ms)")
            else:
                print(f"FAIL {o.record_id}: " + "; ".join(o.mismatches))
        print(f"{len(outcomes) - len(failed)}/{len(outcomes)} records verified")
    return 1 if failed else 0


def _add_poly_options(sub: argparse.ArgumentParser, with_weights: bool = True) -> None:
    sub.add_argument("poly", help="polynomial, e.g. 't^3+z^2x+x^4+xy^5'")
    sub.add_argument("--vars", help="comma-separated variable names (default t,z,x,y)")
    if with_weights:
        sub.add_argument("--weights", help="comma-separated weights (default: inferred)")
    sub.add_argument("--json", action="store_true", help="JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singwf",
        description="Exact differents and well-forming for quasihomogeneous hypersurface singularities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_poly_options(sub.add_parser("analyze", help="full pipeline report"))
    _add_poly_options(sub.add_parser("weights", help="infer the weight system"), with_weights=False)
    _add_poly_options(sub.add_parser("wellform", help="well-forming data only"))
    diff = sub.add_parser("diff", help="different divisors, optionally with a boundary")
    _add_poly_options(diff)
    diff.add_argument("--boundary", help="standard boundary, e.g. 'z=3/5,y=4/5'")

    verify = sub.add_parser("verify", help="re-derive and check dataset records")
    verify.add_argument("paths", nargs="*", help=f"record files/directories (default ${DEFAULT_TABLES_ENV} or ./tables)")
    verify.add_argument("--jobs", type=int, default=1, help="verify records concurrently")
    verify.add_argument("--fail-fast", action="store_true", help="stop at the first failure")
    verify.add_argument("--json", action="store_true", help="JSON output")
    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "weights": _cmd_weights,
    "wellform": _cmd_wellform,
    "diff": _cmd_diff,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SingwfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
