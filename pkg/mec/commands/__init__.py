"""CLI subcommands; each module registers one parser."""

from mec.commands import bench, bound, constants, couple, exact, gaps, plot, validate, verify

COMMANDS = (couple, bound, exact, constants, bench, gaps, verify, validate, plot)

__all__ = ["COMMANDS"]
