"""`mec exact`: optimal coupling of two distributions."""

import argparse
import logging
from typing import Any

from mec.commands.base import add_instance_argument, instance_from_args
from mec.config import get_settings
from mec.core.io import save_coupling
from mec.core.models import CostFn
from mec.exact.registry import get_registry
from mec.utils.errors import EXIT_CODES, SolverTimeoutError
from mec.utils.formatting import format_bits

logger = logging.getLogger(__name__)


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("exact", help="exact minimum-entropy coupling (m=2)")
    add_instance_argument(parser)
    parser.add_argument("--solver", default="backtrack", help="enum, dp or backtrack")
    parser.add_argument(
        "--bound",
        default=None,
        help="pruning bound for backtrack (zero, meet, profile, major-profile)",
    )
    parser.add_argument("--cost", default="shannon", help="shannon or power:<c>")
    parser.add_argument("--timeout", type=float, default=None, help="seconds")
    parser.add_argument("--out", help="write the coupling JSON here")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    s = instance_from_args(args)
    name = get_registry().resolve(args.solver, args.bound)
    timeout = args.timeout if args.timeout is not None else get_settings().exact_timeout_seconds
    result = get_registry().solve(name, s, timeout=timeout, cost=CostFn.parse(args.cost))
    if not result.complete and not result.found:
        raise SolverTimeoutError(result.solver, timeout)

    label = "entropy" if result.cost == "shannon" else f"cost [{result.cost}]"
    print(f"solver:   {result.solver}")
    if result.found:
        value = format_bits(result.value) if result.cost == "shannon" else f"{result.value:.6f}"
        print(f"{label}:  {value}")
        print(f"support:  {result.coupling.support_size if result.coupling else 0}")
    print(f"nodes:    {result.nodes}")
    print(f"time:     {result.elapsed:.3f}s")
    if args.out and result.coupling is not None:
        save_coupling(args.out, result.coupling)
    if not result.complete:
        print(f"incomplete: budget of {timeout}s exhausted, best found shown")
        return EXIT_CODES["timeout"]
    return 0
