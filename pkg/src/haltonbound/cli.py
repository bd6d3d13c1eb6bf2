"""Command-line front end: generation, discrepancy, witness data, verification.

All exact values cross the interface as "numerator/denominator" strings and
all potentially huge indices as decimal strings, so no consumer ever needs
to parse a float or fit an integer into a machine word.  Output is
deterministic: identical invocations produce byte-identical bytes.

Exit codes: 0 success/verified, 1 verification failed, 2 invalid input,
3 operation budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .discrepancy import (
    AnchoredBox,
    PointSet,
    star_discrepancy_exact_with_corner,
    star_discrepancy_lower_bound,
)
from .errors import (
    BetaDegenerate,
    BudgetExceeded,
    HaltonBoundError,
    IdentityViolation,
    VerificationFailed,
)
from .sequence import BaseVector, halton_stream
from .witness import (
    DEFAULT_OP_BUDGET,
    WitnessConfig,
    WitnessReport,
    build_instance,
    verify_theorem,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET_EXCEEDED = 3

BUDGET_ENV_VAR = "HALTON_WITNESS_BUDGET"


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_bases(text: str) -> BaseVector:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse bases {text!r}") from None
    return BaseVector(values)


def _parse_natural(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}") from None
    if value < 0:
        raise ValueError(f"{what} must be non-negative, got {value}")
    return value


def _parse_corner(text: str) -> AnchoredBox:
    try:
        coords = tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse probe corner {text!r}") from None
    return AnchoredBox(coords)


def _budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        budget = args.budget
    else:
        budget = int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_OP_BUDGET))
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    return budget


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_generate(args: argparse.Namespace) -> int:
    bases = _parse_bases(args.bases)
    start = _parse_natural(args.start, "start")
    count = _parse_natural(args.count, "count")
    rows = []
    for offset, point in enumerate(halton_stream(bases, start, count)):
        rows.append((str(start + offset), [_frac(c) for c in point.coords]))
    if args.format == "json":
        obj = {
            "bases": list(bases.bases),
            "start": str(start),
            "count": str(count),
            "points": [{"n": n, "coords": coords} for n, coords in rows],
        }
        print(json.dumps(obj, indent=2))
    else:
        writer = _csv_writer()
        writer.writerow(["n"] + [f"x{i + 1}" for i in range(bases.s)])
        for n, coords in rows:
            writer.writerow([n] + coords)
    return EXIT_OK


def _prefix_start(args: argparse.Namespace) -> int:
    if args.start is not None:
        return _parse_natural(args.start, "start")
    return 1 if args.index_convention == "one-based" else 0


def cmd_discrepancy(args: argparse.Namespace) -> int:
    bases = _parse_bases(args.bases)
    start = _prefix_start(args)
    count = _parse_natural(args.count, "count")
    if count < 1:
        raise ValueError("count must be >= 1")
    budget = _budget(args)
    ps = PointSet.of(halton_stream(bases, start, count))
    common = {
        "bases": list(bases.bases),
        "start": str(start),
        "count": str(count),
    }
    if args.probe:
        probes = [_parse_corner(text) for text in args.probe]
        for box in probes:
            if box.dim != bases.s:
                raise ValueError(
                    f"probe dimension {box.dim} != base count {bases.s}"
                )
        bound = star_discrepancy_lower_bound(ps, probes)
        if args.format == "json":
            obj = dict(common)
            obj["probes"] = [[_frac(y) for y in box.upper] for box in probes]
            obj["lower_bound"] = _frac(bound)
            obj["lower_bound_approx"] = float(bound)
            print(json.dumps(obj, indent=2))
        else:
            writer = _csv_writer()
            writer.writerow(["n_points", "lower_bound", "lower_bound_approx"])
            writer.writerow([str(count), _frac(bound), repr(float(bound))])
        return EXIT_OK
    value, corner = star_discrepancy_exact_with_corner(ps, budget)
    if args.format == "json":
        obj = dict(common)
        obj["n_points"] = str(count)
        obj["d_star"] = _frac(value)
        obj["d_star_approx"] = float(value)
        obj["corner"] = [_frac(y) for y in corner]
        print(json.dumps(obj, indent=2))
    else:
        writer = _csv_writer()
        writer.writerow(["n_points", "d_star", "d_star_approx", "corner"])
        writer.writerow(
            [str(count), _frac(value), repr(float(value)), ";".join(_frac(y) for y in corner)]
        )
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    bases = _parse_bases(args.bases)
    instance = build_instance(WitnessConfig(bases, args.m))
    cells = []
    for k in sorted(instance.shifts):
        hat = instance.hats[k]
        cells.append(
            {
                "k": list(k),
                "period": str(hat.modulus),
                "shift": str(instance.shifts[k]),
                "hit_residue": str(hat.residue),
            }
        )
    if args.format == "json":
        obj = {
            "bases": list(bases.bases),
            "m": args.m,
            "tau": list(instance.tau.tau),
            "m0": instance.tau.m0,
            "p0": bases.p0,
            "beta": _frac(instance.beta),
            "gap": _frac(instance.gap),
            "y": [_frac(c) for c in instance.corner.y],
            "y_tilde": str(instance.y_tilde),
            "alpha_closed": _frac(instance.alpha),
            "bound_4p0": _frac(instance.bound_4p0),
            "bound_8p0": _frac(instance.bound_8p0),
            "cells": cells,
        }
        print(json.dumps(obj, indent=2))
    else:
        writer = _csv_writer()
        writer.writerow(
            [f"k_{i + 1}" for i in range(bases.s)]
            + ["period", "shift", "hit_residue"]
        )
        for cell in cells:
            writer.writerow(
                [str(v) for v in cell["k"]]
                + [cell["period"], cell["shift"], cell["hit_residue"]]
            )
    return EXIT_OK


_VERDICT_ORDER = [
    "beta_gap",
    "shift_identity",
    "alpha_direct_equals_closed",
    "segment_dominates_average",
    "alpha_bound_4p0",
    "prefix_translation",
    "theorem_bound_8p0",
    "index_range",
]


def report_json_dict(report: WitnessReport) -> dict:
    return {
        "bases": list(report.bases),
        "m": report.m,
        "tau": list(report.tau),
        "m0": report.m0,
        "p0": report.p0,
        "beta": _frac(report.beta),
        "gap": _frac(report.gap),
        "y_tilde": str(report.y_tilde),
        "alpha_closed": _frac(report.alpha_closed),
        "alpha_direct": None
        if report.alpha_direct is None
        else _frac(report.alpha_direct),
        "n_star": str(report.n_star),
        "delta_at_n_star": _frac(report.delta_at_n_star),
        "d1": _frac(report.d1),
        "d2": _frac(report.d2),
        "bound_4p0": _frac(report.bound_4p0),
        "bound_8p0": _frac(report.bound_8p0),
        "verdicts": {name: report.verdicts[name] for name in _VERDICT_ORDER},
    }


def cmd_verify(args: argparse.Namespace) -> int:
    bases = _parse_bases(args.bases)
    budget = _budget(args)
    report = verify_theorem(
        WitnessConfig(bases, args.m),
        budget=budget,
        threads=args.threads,
        one_based=args.index_convention == "one-based",
    )
    if args.format == "json":
        print(json.dumps(report_json_dict(report), indent=2))
    else:
        obj = report_json_dict(report)
        writer = _csv_writer()
        header = [
            "bases", "m", "tau", "m0", "p0", "beta", "gap", "y_tilde",
            "alpha_closed", "alpha_direct", "n_star", "delta_at_n_star",
            "d1", "d2", "bound_4p0", "bound_8p0",
        ] + [f"verdict_{name}" for name in _VERDICT_ORDER]
        writer.writerow(header)
        writer.writerow(
            [
                ";".join(str(b) for b in obj["bases"]),
                str(obj["m"]),
                ";".join(str(t) for t in obj["tau"]),
                str(obj["m0"]),
                str(obj["p0"]),
                obj["beta"],
                obj["gap"],
                obj["y_tilde"],
                obj["alpha_closed"],
                "" if obj["alpha_direct"] is None else obj["alpha_direct"],
                obj["n_star"],
                obj["delta_at_n_star"],
                obj["d1"],
                obj["d2"],
                obj["bound_4p0"],
                obj["bound_8p0"],
            ]
            + [obj["verdicts"][name] for name in _VERDICT_ORDER]
        )
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haltonbound",
        description=(
            "Exact Halton-sequence generation, exact star discrepancy, and "
            "machine verification of the adversarial-box discrepancy lower "
            "bound."
        ),
        epilog=(
            "exit codes: 0 ok/verified, 1 verification failed, "
            "2 invalid input, 3 budget exceeded. "
            f"The environment variable {BUDGET_ENV_VAR} overrides the "
            f"default operation budget ({DEFAULT_OP_BUDGET})."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "generate",
        help="emit Halton points with exact fraction coordinates",
        epilog="CSV columns: n, x1, ..., xs (coordinates as num/den).",
    )
    gen.add_argument("--bases", required=True, help="comma-separated bases, e.g. 2,3")
    gen.add_argument("--start", default="0", help="first index (decimal string)")
    gen.add_argument("--count", required=True, help="number of points (decimal string)")
    gen.add_argument("--format", choices=["csv", "json"], default="csv")
    gen.set_defaults(func=cmd_generate)

    disc = sub.add_parser(
        "discrepancy",
        help="exact star discrepancy of a Halton prefix, or probe lower bounds",
        epilog=(
            "CSV columns: n_points, d_star, d_star_approx, corner "
            "(corner coordinates joined by ';'); in probe mode: n_points, "
            "lower_bound, lower_bound_approx."
        ),
    )
    disc.add_argument("--bases", required=True, help="comma-separated bases")
    disc.add_argument("--count", required=True, help="prefix length N (decimal string)")
    disc.add_argument(
        "--start",
        default=None,
        help="first index; defaults to 1 (one-based) or 0 (zero-based)",
    )
    disc.add_argument(
        "--index-convention",
        choices=["one-based", "zero-based"],
        default="one-based",
    )
    disc.add_argument(
        "--probe",
        action="append",
        default=None,
        metavar="Y1,Y2,...",
        help=(
            "anchored-box corner (exact fractions); repeatable; switches to "
            "the certified lower bound max |Delta|/N over the probes"
        ),
    )
    disc.add_argument("--budget", type=int, default=None, help="operation cap")
    disc.add_argument("--format", choices=["csv", "json"], default="csv")
    disc.set_defaults(func=cmd_discrepancy)

    wit = sub.add_parser(
        "witness",
        help="construct the witness corner and cell table (no long pass)",
        epilog=(
            "CSV columns: k_1, ..., k_s, period, shift, hit_residue "
            "(one row per cell, lexicographic in k)."
        ),
    )
    wit.add_argument("--bases", required=True, help="comma-separated bases (s >= 2)")
    wit.add_argument("--m", type=int, required=True, help="construction depth m >= 1")
    wit.add_argument("--format", choices=["csv", "json"], default="json")
    wit.set_defaults(func=cmd_witness)

    ver = sub.add_parser(
        "verify",
        help="run the full lower-bound verification chain",
        epilog=(
            "CSV columns: bases, m, tau, m0, p0, beta, gap, y_tilde, "
            "alpha_closed, alpha_direct, n_star, delta_at_n_star, d1, d2, "
            "bound_4p0, bound_8p0, then one verdict_* column per check "
            "(lists joined by ';')."
        ),
    )
    ver.add_argument("--bases", required=True, help="comma-separated bases (s >= 2)")
    ver.add_argument("--m", type=int, required=True, help="construction depth m >= 1")
    ver.add_argument("--budget", type=int, default=None, help="operation cap")
    ver.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="worker threads"
    )
    ver.add_argument(
        "--index-convention",
        choices=["one-based", "zero-based"],
        default="one-based",
        help="how prefix lengths count indices in the d1/d2 translation",
    )
    ver.add_argument("--format", choices=["csv", "json"], default="json")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except (VerificationFailed, IdentityViolation, BetaDegenerate) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (HaltonBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
