"""`mec couple`: greedy coupling of an instance."""

import argparse
from typing import Any

from mec.commands.base import add_instance_argument, instance_from_args
from mec.core.entropy import coupling_entropy
from mec.core.io import save_coupling
from mec.greedy.coupler import greedy_coupling
from mec.utils.formatting import format_bits, format_masses, format_table


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("couple", help="greedy coupling of an instance")
    add_instance_argument(parser)
    parser.add_argument("--trace", action="store_true", help="print every greedy step")
    parser.add_argument("--out", help="write the coupling JSON here")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    s = instance_from_args(args)
    coupling, trace = greedy_coupling(s)
    if args.trace:
        rows = [
            (t + 1, step.mass, step.remaining_before, str(step.indices))
            for t, step in enumerate(trace.steps)
        ]
        print(format_table(["step", "mass", "remaining", "indices"], rows))
    print(f"entries:  {format_masses(trace.masses)}")
    print(f"support:  {coupling.support_size}")
    print(f"entropy:  {format_bits(coupling_entropy(coupling))}")
    if args.out:
        save_coupling(args.out, coupling)
        print(f"written:  {args.out}")
    return 0
