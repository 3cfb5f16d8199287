"""Per-step checks on greedy runs: the m=2 monovariant and remaining-mass certificates."""

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

from mec.bounds.profile import curve_entropy, profile_points
from mec.bounds.rem_mass import rem_mass_advanced, rem_mass_simple
from mec.core.models import LG_E_OVER_E, InstanceSet
from mec.greedy.coupler import GreedyCoupler, GreedyStep
from mec.utils.errors import UnsupportedError

RemMassKind = Literal["simple", "advanced"]

REM_MASS: dict[RemMassKind, Callable[[InstanceSet, float], float]] = {
    "simple": rem_mass_simple,
    "advanced": rem_mass_advanced,
}


@dataclass(frozen=True)
class MonovariantPoint:
    """M_t after step t; `step_mass` is the mass allocated at step t (0 at t=0)."""

    t: int
    value: float
    step_mass: float


def monovariant_trace(s: InstanceSet) -> list[MonovariantPoint]:
    """Profile entropy of the residual pair plus entropy allocated so far, per step."""
    if s.m != 2:
        raise UnsupportedError(f"the stepwise monovariant is defined for m=2, got m={s.m}")
    engine = GreedyCoupler(s, track_indices=False)

    def residual_profile() -> float:
        return curve_entropy(*profile_points(engine.residuals()))

    so_far = 0.0
    points = [MonovariantPoint(0, residual_profile(), 0.0)]
    while (step := engine.step()) is not None:
        so_far += step.mass * -math.log2(step.mass)
        points.append(MonovariantPoint(len(points), residual_profile() + so_far, step.mass))
    return points


def monovariant_violations(
    trace: list[MonovariantPoint], slack: float = 1e-9
) -> list[MonovariantPoint]:
    """Points where M grew by more than (lg e / e) times the step mass."""
    return [
        cur
        for prev, cur in zip(trace, trace[1:], strict=False)
        if cur.value - prev.value > LG_E_OVER_E * cur.step_mass + slack
    ]


def rem_mass_violations(
    s: InstanceSet, kind: RemMassKind = "advanced", slack: float = 1e-9
) -> list[GreedyStep]:
    """Greedy steps whose remaining mass exceeds Rem-Mass at the allocated size."""
    bound = REM_MASS[kind]
    engine = GreedyCoupler(s, track_indices=False)
    violations = []
    while (step := engine.step()) is not None:
        if bound(s, step.mass) < step.remaining_before - slack:
            violations.append(step)
    return violations
