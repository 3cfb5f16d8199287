"""`mec bound`: lower bounds on the optimal coupling entropy."""

import argparse
from typing import Any

from mec.bounds.registry import BOUND_KINDS, lower_bound, parse_bound_kind
from mec.commands.base import add_instance_argument, instance_from_args
from mec.utils.formatting import format_table


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("bound", help="entropy lower bounds of an instance")
    add_instance_argument(parser)
    parser.add_argument(
        "--kind",
        default="all",
        help=f"one of {', '.join(BOUND_KINDS)} or all",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    s = instance_from_args(args)
    kinds = list(BOUND_KINDS) if args.kind == "all" else [parse_bound_kind(args.kind)]
    rows = [(kind, lower_bound(s, kind)) for kind in kinds]
    print(format_table(["bound", "bits"], rows))
    return 0
