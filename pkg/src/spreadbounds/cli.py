"""Command-line front end.

Exit codes: 0 success, 1 invalid instance, 2 bad flags, 3 capacity error,
4 failed verification (cross-check or identity check).
"""

import argparse
import csv
import io
import json
import logging
import random
import sys

from .bounds import all_bounds, best_bounds, decompose
from .galois import DEFAULT_POINT_LIMIT, CapacityError
from .oracle import (
    CrossCheckError,
    SearchBudget,
    cross_check,
    format_witness,
    greedy_partial_spread,
    hole_distribution,
    verify_hyperplane_congruences,
    verify_standard_equations,
)
from .vsp_analysis import HoleType, exclude_hole_type

log = logging.getLogger("spreadbounds")

CSV_HEADER = ["q", "n", "t", "k", "r", "l", "lower", "upper", "exact", "upper_method", "z", "y", "x"]
METHOD_CSV_HEADER = ["q", "n", "t", "method", "direction", "value", "z", "u", "y", "x"]

EXIT_INVALID = 1
EXIT_CAPACITY = 3
EXIT_VERIFY = 4

RECORD_SCHEMA = {
    "type": "object",
    "required": ["q", "n", "t", "k", "r", "l", "lower", "upper", "exact", "upper_method", "params"],
    "properties": {
        "q": {"type": "integer"},
        "n": {"type": "integer"},
        "t": {"type": "integer"},
        "k": {"type": "integer"},
        "r": {"type": "integer"},
        "l": {"type": "string", "pattern": "^[0-9]+$"},
        "lower": {"type": "string", "pattern": "^[0-9]+$"},
        "upper": {"type": "string", "pattern": "^[0-9]+$"},
        "exact": {"type": "boolean"},
        "upper_method": {"enum": ["Packing", "Theorem1", "Theorem2"]},
        "params": {
            "type": "object",
            "additionalProperties": {"type": "string", "pattern": "^-?[0-9]+$"},
        },
        "methods": {"type": "array"},
    },
}


def _params(params):
    return {k: str(v) for k, v in params.items()}


def output_record(bb):
    inst = bb.instance
    return {
        "q": inst.q,
        "n": inst.n,
        "t": inst.t,
        "k": inst.k,
        "r": inst.r,
        "l": str(inst.l),
        "lower": str(bb.lower.value),
        "upper": str(bb.upper.value),
        "exact": bb.exact,
        "upper_method": bb.upper.method,
        "params": _params(bb.upper.params),
    }


def method_record(result):
    return {
        "method": result.method,
        "direction": result.direction,
        "value": str(result.value),
        "params": _params(result.params),
        "certificate": list(result.certificate),
    }


def _csv_row(rec):
    row = [rec[key] for key in CSV_HEADER[:10]]
    row[8] = str(rec["exact"]).lower()
    row += [rec["params"].get(key, "") for key in ("z", "y", "x")]
    return row


def _write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    lo = int(lo)
    hi = int(hi) if sep else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def cmd_bound(args, out):
    bb = best_bounds(args.q, args.n, args.t)
    rec = output_record(bb)
    methods = [b for b in all_bounds(bb.instance).values() if b is not None] if args.all_methods else []
    if args.json:
        if methods:
            rec["methods"] = [method_record(b) for b in methods]
        json.dump(rec, out, indent=2)
        out.write("\n")
    elif args.csv:
        if methods:
            rows = [
                [args.q, args.n, args.t, b.method, b.direction, b.value]
                + [b.params.get(k, "") for k in ("z", "u", "y", "x")]
                for b in methods
            ]
            _write_csv(out, METHOD_CSV_HEADER, rows)
        else:
            _write_csv(out, CSV_HEADER, [_csv_row(rec)])
    else:
        inst = bb.instance
        params = " ".join(f"{k}={v}" for k, v in bb.upper.params.items())
        out.write(
            f"A_{inst.q}({inst.n},{2 * inst.t};{inst.t}): lower {bb.lower.value} "
            f"upper {bb.upper.value} via {bb.upper.method}"
            + (f" ({params})" if params else "")
            + (" exact\n" if bb.exact else "\n")
        )
        out.write(f"  n = {inst.k}*{inst.t} + {inst.r}, l = {inst.l}\n")
        for b in methods:
            params = " ".join(f"{k}={v}" for k, v in b.params.items())
            out.write(f"{b.method:<13} {b.direction:<6} {b.value} {params}\n")
            for line in b.certificate:
                out.write(f"    {line}\n")
    return 0


def table_records(q_list, t_range, k_range):
    records = []
    for q in sorted(set(q_list)):
        for t in t_range:
            for k in k_range:
                for r in range(t):
                    records.append(output_record(best_bounds(q, k * t + r, t)))
    return records


def cmd_table(args, out):
    records = table_records(args.q_list, args.t_range, args.k_range)
    if args.format == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        _write_csv(out, CSV_HEADER, [_csv_row(rec) for rec in records])
    else:
        for rec in records:
            mark = "=" if rec["exact"] else " "
            out.write(
                f"q={rec['q']} n={rec['n']:>3} t={rec['t']:>2}  {rec['lower']:>20} "
                f"{mark} {rec['upper']:<20} {rec['upper_method']}\n"
            )
    if args.figure:
        from .report import plot_bound_gaps

        plot_bound_gaps(records, args.figure, title="upper minus lower bound")
        log.info("figure written to %s", args.figure)
    return 0


def cmd_exclude(args, out):
    hole_type = HoleType(args.t, args.s, args.c)
    verdict = exclude_hole_type(args.q, args.n, hole_type)
    if args.json:
        json.dump(
            {
                "status": verdict.status,
                "witness_m": None if verdict.witness_m is None else str(verdict.witness_m),
                "f_value": None if verdict.f_value is None else str(verdict.f_value),
                "trace": verdict.trace,
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(verdict.status + (f" (m={verdict.witness_m})" if verdict.excluded else "") + "\n")
        for line in verdict.trace:
            out.write(f"  {line}\n")
    return 0


def cmd_oracle(args, out):
    budget = SearchBudget(max_nodes=args.max_nodes, max_seconds=args.budget_seconds, mode=args.mode)
    try:
        report, result = cross_check(args.q, args.n, args.t, budget, point_limit=args.point_limit)
    except CrossCheckError as exc:
        log.error("cross-check failed: %s", exc)
        return EXIT_VERIFY
    if args.emit_witness:
        with open(args.emit_witness, "w") as fh:
            fh.write(format_witness(result.witness))
    if args.json:
        json.dump(
            {
                "q": args.q,
                "n": args.n,
                "t": args.t,
                "size": str(result.size),
                "proven_optimal": result.proven_optimal,
                "holes": str(result.witness.hole_count),
                "lower": str(report.lower),
                "upper": str(report.upper),
                "cross_check": "pass",
                "checks": report.checks,
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(
            f"size {result.size} proven_optimal {str(result.proven_optimal).lower()} "
            f"bounds [{report.lower}, {report.upper}] cross-check pass\n"
        )
        for line in report.checks:
            out.write(f"  {line}\n")
    return 0


def cmd_verify(args, out):
    rng = random.Random(args.seed)
    failures = 0
    for i in range(args.samples):
        spread = greedy_partial_spread(args.q, args.n, args.t, rng, args.point_limit)
        ok_eq, residuals = verify_standard_equations(hole_distribution(spread))
        ok_cong, cong = verify_hyperplane_congruences(spread)
        failures += (not ok_eq) + (not ok_cong)
        out.write(
            f"sample {i}: size {spread.size} holes {spread.hole_count} "
            f"equations {'ok' if ok_eq else residuals} "
            f"congruence {cong['residue']} mod {cong['modulus']} "
            f"{'ok' if ok_cong else 'violated on ' + str(len(cong['violations']))}\n"
        )
    return EXIT_VERIFY if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="spreadbounds", description="Bounds on partial spreads A_q(n,2t;t).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def instance_flags(p):
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    p = add("bound", help="bounds for one instance")
    instance_flags(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--all-methods", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = add("table", help="bounds over a parameter grid")
    p.add_argument("--q-list", type=_parse_list, required=True)
    p.add_argument("--t-range", type=_parse_range, required=True)
    p.add_argument("--k-range", type=_parse_range, required=True)
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.add_argument("--figure", metavar="PATH", help="also write a bound-gap chart")
    p.set_defaults(func=cmd_table)

    p = add("exclude", help="test whether a hole-type can exist")
    instance_flags(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exclude)

    p = add("oracle", help="exact search for a maximum partial spread")
    instance_flags(p)
    p.add_argument("--budget-seconds", type=float, default=60.0)
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.add_argument("--mode", choices=["exact", "greedy"], default="exact")
    p.add_argument("--point-limit", type=int, default=DEFAULT_POINT_LIMIT)
    p.add_argument("--emit-witness", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = add("verify", help="check counting identities on random partial spreads")
    instance_flags(p)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--point-limit", type=int, default=DEFAULT_POINT_LIMIT)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except CapacityError as exc:
        log.error("%s", exc)
        return EXIT_CAPACITY
    except (ValueError, ArithmeticError) as exc:
        log.error("invalid instance: %s", exc)
        return EXIT_INVALID


def run(argv=None):
    """Capture stdout of one invocation; returns (exit_code, text)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
