"""`mec bench`: runtime table of the exact solvers."""

import argparse
from typing import Any

from mec.bench.harness import DEFAULT_ALGORITHMS, BenchConfig, bench_runtimes, write_csv
from mec.config import get_settings, parse_comma_list, parse_int_range, parse_shapes
from mec.utils.errors import InvalidInputError
from mec.utils.formatting import format_table


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("bench", help="time the exact solvers on Dirichlet pairs")
    parser.add_argument("--out", default="results.csv", help="CSV output path")
    parser.add_argument(
        "--algorithms",
        default=",".join(DEFAULT_ALGORITHMS),
        help="comma-separated solver names",
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--n-range", default="4..6", help='square shapes, e.g. "4..7"')
    group.add_argument("--shapes", default=None, help='explicit shapes, e.g. "6x3,7x3"')
    parser.add_argument("--runs", type=int, default=None)
    parser.add_argument("--timeout", type=float, default=None, help="seconds per run")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--no-warmup", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    settings = get_settings()
    try:
        if args.shapes:
            shapes = parse_shapes(args.shapes)
        else:
            shapes = [(n, n) for n in parse_int_range(args.n_range)]
    except ValueError as e:
        raise InvalidInputError(f"bad shape list: {e}") from e

    config = BenchConfig(
        algorithms=parse_comma_list(args.algorithms),
        shapes=shapes,
        runs=args.runs or settings.bench_runs,
        seed=settings.seed if args.seed is None else args.seed,
        timeout=args.timeout or settings.exact_timeout_seconds,
        warmup=settings.bench_warmup and not args.no_warmup,
    )
    rows = bench_runtimes(config)
    write_csv(args.out, rows)
    print(format_table(["algorithm", "n1", "n2", "runs", "mean_s", "stddev_s", "timeouts"],
                       [row.as_csv() for row in rows]))
    print(f"written: {args.out}")
    return 0
