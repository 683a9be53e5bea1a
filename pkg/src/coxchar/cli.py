"""Command-line driver.

    coxchar --family B --rank 4 --check regular
    coxchar --family D --rank 5 --check all --json report.json
    coxchar --family B --rank 3 --check shape --shape "1"
    coxchar --family B --rank 7 --check regular --budget-elements 1000000

Exit codes: 0 all requested checks pass (or are skipped), 1 a verification
failed, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .groups import BudgetError, GroupDescriptor
from .lattice import get_lattice
from .shapes import parse_shape, shapes
from .verify import (
    VerificationReport,
    format_poincare_table,
    poincare_table,
    verify_graded,
    verify_os,
    verify_regular,
    verify_shape,
)

CLI_ELEMENT_BUDGET = 50_000
CLI_FLAT_BUDGET = 6_000

LATTICE_CHECKS = ("os", "graded", "shape", "poincare")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxchar",
        description="Verify character identities for classical Coxeter groups.",
    )
    parser.add_argument("--family", required=True, choices=list("ABDEFH"))
    parser.add_argument("--rank", required=True, type=int)
    parser.add_argument(
        "--check",
        default="all",
        choices=["regular", "os", "graded", "shape", "poincare", "all"],
    )
    parser.add_argument(
        "--shape",
        default=None,
        help='shape label, e.g. "2+1", "" for the full group, "2+2^-" in type D',
    )
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--json", default=None, metavar="PATH")
    parser.add_argument(
        "--budget-elements",
        type=int,
        default=CLI_ELEMENT_BUDGET,
        help=f"largest group/centralizer enumerated (default {CLI_ELEMENT_BUDGET}; "
        "rank 7-8 runs need an explicit raise)",
    )
    parser.add_argument(
        "--budget-flats",
        type=int,
        default=CLI_FLAT_BUDGET,
        help=f"largest intersection lattice built (default {CLI_FLAT_BUDGET})",
    )
    return parser


def run(args) -> tuple[list[VerificationReport], int]:
    if args.family not in "ABD":
        report = VerificationReport(
            f"{args.family}{args.rank}",
            args.check,
            "skipped",
            [{"class": "-", "expected": "-", "got": "skipped: out of desk scale"}],
        )
        return [report], 0

    G = GroupDescriptor(args.family, args.rank)
    checks = (
        ["regular", "os", "graded", "shape", "poincare"]
        if args.check == "all"
        else [args.check]
    )
    reports: list[VerificationReport] = []
    lattice = None
    if any(c in LATTICE_CHECKS for c in checks):
        lattice = get_lattice(G, args.budget_flats)
    kwargs = dict(budget_elements=args.budget_elements, threads=args.threads)
    for check in checks:
        if check == "regular":
            reports.append(verify_regular(G, **kwargs))
        elif check == "os":
            reports.append(verify_os(G, lattice=lattice, **kwargs))
        elif check == "graded":
            reports.append(verify_graded(G, lattice=lattice, **kwargs))
        elif check == "shape":
            if args.shape is not None:
                targets = [parse_shape(args.shape)]
            else:
                targets = list(shapes(G))
            for shape in targets:
                reports.append(verify_shape(G, shape, lattice=lattice, **kwargs))
        elif check == "poincare":
            report = poincare_table(
                G, budget_elements=args.budget_elements, lattice=lattice
            )
            reports.append(report)
    code = 0 if all(r.passed for r in reports) else 1
    return reports, code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports, code = run(args)
    except BudgetError as err:
        print(f"budget error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    for report in reports:
        print(report.summary())
        if report.table is not None:
            print(format_poincare_table(report))
        for entry in report.discrepancies:
            print(f"  {entry}")
    if args.json:
        payload = {"reports": [r.to_dict() for r in reports]}
        with open(args.json, "w") as handle:
            json.dump(payload, handle, indent=2)
    return code


if __name__ == "__main__":
    sys.exit(main())
