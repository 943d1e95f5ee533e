"""Command-line entry point: ``gibgcd <subcommand> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import gcd_engine as ge
from . import explorer
from .pisano import ModulusError, pisano_period
from .sequences import GibonacciSpec, PreconditionError, characteristic, gib_term

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _spec(args) -> GibonacciSpec:
    return GibonacciSpec(args.g0, args.g1)


def _emit(args, text: str) -> int:
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_term(args) -> int:
    print(gib_term(_spec(args), args.n))
    return EXIT_OK


def cmd_mu(args) -> int:
    print(characteristic(_spec(args)))
    return EXIT_OK


def cmd_pisano(args) -> int:
    res = pisano_period(_spec(args), args.m)
    if args.format == "json":
        print(json.dumps({"modulus": str(res.modulus), "period": str(res.period),
                          "residue_seed": [str(x) for x in res.residue_seed]}))
    else:
        print(res.period)
    return EXIT_OK


def cmd_gcd(args) -> int:
    spec, k, power = _spec(args), args.k, args.power
    if power < 1:
        raise PreconditionError(f"power must be >= 1, got {power}")
    fields: dict
    if power == 2:
        c = ge.gcd_squares_classified(spec, k, cross_check=not args.no_crosscheck,
                                      windows=args.oracle_windows)
        fields = {"value": c.value, "case": str(c.case_tag), "scale_factor": c.scale_factor,
                  "oracle_agrees": c.oracle_agrees}
        failed = c.oracle_agrees is False
    elif power == 1:
        value = ge.gcd_firstpower_closed(spec, k)
        agrees = None
        if not args.no_crosscheck:
            agrees = ge.gcd_power_bruteforce(spec, k, 1, args.oracle_windows) == value
        fields = {"value": value, "case": "FirstPower", "oracle_agrees": agrees}
        failed = agrees is False
    else:
        rep = ge.gcd_power_oracle(spec, k, power, args.oracle_windows)
        fields = {"value": rep.value, "case": "Conjectural", "windows": rep.windows,
                  "stable": rep.stable}
        failed = False

    if args.format == "json":
        print(json.dumps({key: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                          for key, v in fields.items()}))
    else:
        print(fields["value"])
        for key, v in fields.items():
            if key == "value":
                continue
            print(f"{key}: {'n/a' if v is None else v}")
        if power >= 3:
            print("note: conjectural - truncated oracle, no proven closed form")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_table(args) -> int:
    if (args.g0 is None) != (args.g1 is None):
        raise PreconditionError("--g0 and --g1 must be given together")
    spec = None if args.g0 is None else GibonacciSpec(args.g0, args.g1)
    rows, bad = explorer.build_table(args.k_min, args.k_max, spec, args.oracle_windows)
    if args.format == "json":
        text = explorer.rows_to_json(rows, spec) + "\n"
    elif args.format == "csv":
        text = explorer.rows_to_csv(rows)
    else:
        lines = [f"{'k':>4}  {'case':<14} {'fib':>12} {'lucas':>12} {'gib':>12}"]
        for r in rows:
            gib = "" if r.gib_value is None else str(r.gib_value)
            lines.append(f"{r.k:>4}  {r.case_label:<14} {r.fib_value:>12} "
                         f"{r.lucas_value:>12} {gib:>12}")
        text = "\n".join(lines) + "\n"
    rc = _emit(args, text)
    if rc:
        return rc
    if bad:
        print(f"oracle mismatch at k = {bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_conjecture_cubes(args) -> int:
    reports = explorer.conjecture_cubes(args.setting, args.k_max, args.oracle_windows)
    if args.format == "json":
        print(json.dumps([explorer.report_to_dict(r) for r in reports], indent=2))
    else:
        print(f"{args.setting}: cube conjecture (empirical, not a theorem)")
        for r in reports:
            mark = "agree" if r.agrees else "DISAGREE"
            print(f"k={r.k:>3} oracle={r.oracle_value} conjectured={r.conjectured_value} "
                  f"factor={r.factor_used} stable={r.oracle_stable} {mark}")
    agree = sum(r.agrees for r in reports)
    print(f"summary: {agree}/{len(reports)} agree", file=sys.stderr)
    return EXIT_OK


def cmd_periodicity(args) -> int:
    rep = explorer.find_periodicity(_spec(args), args.power, args.k_max)
    if args.format == "json":
        print(json.dumps(explorer.report_to_dict(rep), indent=2))
        return EXIT_OK
    print("heuristic search over odd k (evidence only)")
    if rep.candidate_period is None:
        print(f"no even period <= {args.k_max // 2} found through k = {rep.verified_through}")
        return EXIT_OK
    print(f"candidate_period: {rep.candidate_period}")
    print(f"verified_through: {rep.verified_through}")
    for residue, value in rep.residue_classes.items():
        print(f"  k = {residue} mod {rep.candidate_period}: {value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = explorer.run_verification(args.max_seed, args.max_k, args.windows,
                                        args.max_modulus, args.identity_samples, args.jobs)
    for fam in results:
        status = "PASS" if fam.passed else "FAIL"
        print(f"{status} {fam.name:<26} checked={fam.checked} failed={fam.failed}")
    for fam in results:
        if not fam.passed:
            print(f"counterexample ({fam.name}): {fam.first_counterexample}")
            return EXIT_FAIL
    return EXIT_OK


def _add_spec(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--g0", type=int, required=required)
    p.add_argument("--g1", type=int, required=required)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gibgcd",
        description="GCDs of sums of k consecutive powers of Gibonacci numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", help="print G_n")
    _add_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("mu", help="print the characteristic G1^2 - G0 G1 - G0^2")
    _add_spec(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("pisano", help="period of the sequence modulo m")
    _add_spec(p)
    p.add_argument("--m", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_pisano)

    for name, power in (("gcd", 2), ("gcd1", 1)):
        p = sub.add_parser(name, help="GCD of all k-window power sums"
                           + (" (first powers)" if power == 1 else ""))
        _add_spec(p)
        p.add_argument("--k", type=int, required=True)
        if name == "gcd":
            p.add_argument("--power", type=int, default=2)
        else:
            p.set_defaults(power=1)
        p.add_argument("--oracle-windows", type=int, default=ge.DEFAULT_ORACLE_WINDOWS)
        p.add_argument("--no-crosscheck", action="store_true")
        _add_format(p)
        p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("table", help="closed-form table for Fibonacci, Lucas and an optional spec")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, required=True)
    _add_spec(p, required=False)
    p.add_argument("--oracle-windows", type=int, default=ge.DEFAULT_ORACLE_WINDOWS)
    p.add_argument("--output", "-o")
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("conjecture-cubes", help="compare cube-sum GCDs with the open conjecture")
    p.add_argument("--setting", choices=("fibonacci", "lucas"), required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--oracle-windows", type=int, default=40)
    _add_format(p)
    p.set_defaults(func=cmd_conjecture_cubes)

    p = sub.add_parser("periodicity", help="search for a period of the GCD over odd k")
    _add_spec(p)
    p.add_argument("--power", type=int, choices=(1, 2), default=2)
    p.add_argument("--k-max", type=int, default=149)
    _add_format(p)
    p.set_defaults(func=cmd_periodicity)

    p = sub.add_parser("verify", help="run the invariant grid")
    p.add_argument("--max-seed", type=int, default=10)
    p.add_argument("--max-k", type=int, default=60)
    p.add_argument("--windows", type=int, default=10)
    p.add_argument("--max-modulus", type=int, default=50)
    p.add_argument("--identity-samples", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, ge.DegenerateSpecError, ModulusError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
