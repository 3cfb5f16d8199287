"""`mec plot`: sketch figure of an instance."""

import argparse
from typing import Any

from mec.commands.base import add_instance_argument, instance_from_args
from mec.plotting import plot_instance


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("plot", help="draw sketches and the profile")
    add_instance_argument(parser)
    parser.add_argument("--out", default="sketches.png", help="image path")
    parser.add_argument("--title", default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    path = plot_instance(instance_from_args(args), args.out, title=args.title)
    print(f"written: {path}")
    return 0
