"""Shared argument helpers for subcommands."""

import argparse

from mec.core.io import load_instance
from mec.core.models import InstanceSet


def add_instance_argument(parser: argparse.ArgumentParser) -> None:
    """Positional instance path plus the --normalize override."""
    parser.add_argument("instance", help="instance JSON file")
    parser.add_argument(
        "--normalize",
        action="store_true",
        default=None,
        help="rescale every distribution to total mass 1",
    )


def instance_from_args(args: argparse.Namespace) -> InstanceSet:
    return load_instance(args.instance, normalize=args.normalize)
