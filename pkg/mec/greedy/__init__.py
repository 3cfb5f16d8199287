"""Greedy coupling and its per-step guarantee checks."""

from mec.greedy.coupler import (
    GreedyCoupler,
    GreedyStep,
    GreedyTrace,
    greedy_coupling,
    greedy_sizes,
)
from mec.greedy.monovariant import (
    MonovariantPoint,
    RemMassKind,
    monovariant_trace,
    monovariant_violations,
    rem_mass_violations,
)

__all__ = [
    "GreedyCoupler",
    "GreedyStep",
    "GreedyTrace",
    "MonovariantPoint",
    "RemMassKind",
    "greedy_coupling",
    "greedy_sizes",
    "monovariant_trace",
    "monovariant_violations",
    "rem_mass_violations",
]
