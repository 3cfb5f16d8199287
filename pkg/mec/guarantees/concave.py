"""Multiplicative guarantees of the greedy coupling under concave power costs."""

import logging
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from mec.bounds.profile import curve_cost, profile_cost, profile_curve, profile_points
from mec.core.entropy import masses_cost
from mec.core.models import CostFn, InstanceSet
from mec.greedy.coupler import GreedyCoupler, greedy_sizes
from mec.guarantees.constants import GuaranteeReport
from mec.utils.errors import (
    InvalidInputError,
    NoGuaranteeError,
    UndefinedRatioError,
    UnsupportedError,
)

logger = logging.getLogger(__name__)


def _power_exponent(f: CostFn) -> float:
    if f.kind != "power" or f.exponent is None:
        raise UnsupportedError("multiplicative ratios are wired for power costs only")
    return f.exponent


def closed_form_ratio(c: float) -> float:
    """max over t in (0, 1) of t**c - t."""
    return float(c ** (1.0 / (1.0 - c)) * (1.0 / c - 1.0))


def mult_ratio_two(f: CostFn) -> GuaranteeReport:
    """r = max f(q)/f(p) - q/p over 0 < q < p, and the 1/(1-r) factor for m=2.

    For x**c the ratio only depends on t = q/p.
    """
    c = _power_exponent(f)
    res = minimize_scalar(
        lambda t: -(t**c - t),
        bounds=(0.0, 1.0),
        method="bounded",
        options={"xatol": 1e-12},
    )
    r = float(-res.fun)
    if r >= 1.0:
        raise NoGuaranteeError(r)
    return GuaranteeReport(
        parameter=f"power({c:g})",
        value=1.0 / (1.0 - r),
        point=(float(res.x),),
        extras={"r": r, "closed_form_r": closed_form_ratio(c)},
    )


def mult_guarantee_general(c: float) -> float:
    """Factor 1/2 + 1/(c 2^c) for any number of distributions."""
    if not 0.0 < c <= 1.0:
        raise InvalidInputError(f"exponent must lie in (0, 1], got {c}")
    return 0.5 + 1.0 / (c * 2.0**c)


@dataclass(frozen=True)
class MultCheck:
    greedy_cost: float
    bound: float
    ratio: float
    factor: float

    @property
    def ok(self) -> bool:
        return self.ratio <= self.factor + 1e-9


def guarantee_factor(m: int, f: CostFn) -> float:
    c = _power_exponent(f)
    return mult_ratio_two(f).value if m == 2 else mult_guarantee_general(c)


def check_mult_guarantee(s: InstanceSet, f: CostFn) -> MultCheck:
    """Greedy cost against the profile cost bound."""
    factor = guarantee_factor(s.m, f)
    bound = profile_cost(profile_curve(s), f)
    if bound <= 0.0:
        raise UndefinedRatioError()
    greedy = masses_cost(greedy_sizes(s).array, f)
    return MultCheck(greedy_cost=greedy, bound=bound, ratio=greedy / bound, factor=factor)


def cost_monovariant_trace(s: InstanceSet, f: CostFn) -> list[float]:
    """F(profile of residuals) + (1 - r) F(greedy so far), per greedy step (m=2).

    The sequence never increases, which yields F(greedy) <= F(profile) / (1 - r).
    """
    if s.m != 2:
        raise UnsupportedError(f"the cost monovariant is defined for m=2, got m={s.m}")
    r = mult_ratio_two(f).extras["r"]
    engine = GreedyCoupler(s, track_indices=False)

    def residual_cost() -> float:
        xs, ys = profile_points(engine.residuals())
        return curve_cost(xs, ys, f)

    allocated = 0.0
    trace = [residual_cost()]
    while (step := engine.step()) is not None:
        allocated += masses_cost([step.mass], f)
        trace.append(residual_cost() + (1.0 - r) * allocated)
    return trace


def cost_monovariant_violations(trace: list[float], slack: float = 1e-9) -> list[int]:
    """Steps t where the monovariant rose."""
    return [t for t in range(1, len(trace)) if trace[t] > trace[t - 1] + slack]


def power_table(c: float) -> GuaranteeReport:
    """Both multiplicative factors for x**c: m=2 (with r) and any m."""
    f = CostFn.power(c)
    two = mult_ratio_two(f)
    return GuaranteeReport(
        parameter=two.parameter,
        value=two.value,
        point=two.point,
        extras={**two.extras, "general": mult_guarantee_general(c)},
    )
