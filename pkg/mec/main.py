"""Main entry point for the `mec` command."""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from mec import __version__
from mec.commands import COMMANDS
from mec.utils.errors import EXIT_CODES, MecError
from mec.utils.logging import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mec",
        description="Minimum-entropy couplings: greedy coupling, lower bounds, exact solvers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="override MEC_LOG_LEVEL",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level, command=args.command)

    try:
        return int(args.handler(args))
    except MecError as e:
        logger.debug(f"{args.command} failed: {e}")
        print(f"error: {e.user_message()}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        first = e.errors()[0]
        print(f"error: Invalid input: {first['msg']}", file=sys.stderr)
        return EXIT_CODES["invalid_input"]
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
