"""`mec verify`: run the invariant sweep."""

import argparse
from typing import Any

from mec.bench.verify import VerifyCounts, verify_suite
from mec.config import get_settings
from mec.utils.formatting import format_table

QUICK = VerifyCounts(greedy=20, bounds=40, exact=8, exact_max_n=4, guarantees=20, concave=5)


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("verify", help="check every invariant on seeded instances")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--quick", action="store_true", help="small case counts")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument(
        "--inject-corruption",
        action="store_true",
        help="also confirm that a corrupted coupling is rejected",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    report = verify_suite(
        seed=get_settings().seed if args.seed is None else args.seed,
        counts=QUICK if args.quick else VerifyCounts(),
        inject_corruption=args.inject_corruption,
        workers=args.workers,
    )
    rows = [
        (check.name, check.cases, "ok" if check.passed else f"FAIL ({len(check.failures)})")
        for check in report.checks
    ]
    print(format_table(["check", "cases", "status"], rows))
    for check in report.checks:
        for failure in check.failures:
            print(f"{check.name}: {failure}")
    report.raise_for_failures()
    return 0
