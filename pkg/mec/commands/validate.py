"""`mec validate`: check a coupling file against an instance."""

import argparse
from typing import Any

from mec.commands.base import add_instance_argument, instance_from_args
from mec.core.entropy import coupling_entropy
from mec.core.io import load_coupling
from mec.core.validation import support_limit, validate_coupling
from mec.utils.formatting import format_bits


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("validate", help="check a coupling's marginals")
    add_instance_argument(parser)
    parser.add_argument("coupling", help="coupling JSON file")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    s = instance_from_args(args)
    coupling = load_coupling(args.coupling)
    report = validate_coupling(s, coupling)
    for violation in report.violations:
        print(f"violation {violation}")
    report.raise_for_violations()
    print("ok")
    print(f"support:  {coupling.support_size} (vertex limit {support_limit(s)})")
    print(f"entropy:  {format_bits(coupling_entropy(coupling))}")
    return 0
