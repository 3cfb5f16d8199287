"""Seeded sweep that runs every coupling invariant over random and fixed instances.

Each check is a top-level function so that checks can fan out over worker
processes; instances are drawn from a generator keyed by (seed, check, case).
"""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from pydantic import BaseModel, Field

from mec.bench.catalog import GAP_CATALOG
from mec.bench.generators import gen_geometric_gap, make_rng, sample_simplex
from mec.bench.objectives import evaluate_gap
from mec.bounds.meet import majorization_meet, majorizes
from mec.bounds.profile import (
    major_profile,
    profile_curve,
    profile_entropy,
    profile_transpose_entropy,
)
from mec.bounds.registry import BOUND_KINDS, lower_bound
from mec.bounds.rem_mass import rem_mass_advanced, rem_mass_simple
from mec.config import get_settings
from mec.core.entropy import coupling_entropy, entropy
from mec.core.models import (
    HALF_ONE_PLUS_LG_E,
    LG_E_OVER_E,
    Coupling,
    CostFn,
    InstanceSet,
)
from mec.core.validation import support_limit, validate_coupling
from mec.exact.backtrack import backtrack_exact
from mec.exact.dp import dp_exact
from mec.exact.enumeration import vertex_enum_exact
from mec.exact.forest import check_forest_leaf_property
from mec.greedy.coupler import greedy_coupling, greedy_sizes
from mec.greedy.monovariant import monovariant_trace, monovariant_violations, rem_mass_violations
from mec.guarantees.concave import check_mult_guarantee, mult_guarantee_general, mult_ratio_two
from mec.guarantees.constants import small_m_constant
from mec.utils.errors import InvariantError
from mec.utils.formatting import format_masses

logger = logging.getLogger(__name__)

ENUM_MAX_STATES = 4
SMALL_M_MAX = 6
# published constants carry two decimals
TABLE_TOLERANCE = 5e-3
TABLE_TARGETS = {2: 0.53, 3: 0.77, 11: 1.21}


class VerifyCounts(BaseModel):
    """Random cases per check."""

    greedy: int = Field(default=100, ge=0)
    bounds: int = Field(default=200, ge=0)
    exact: int = Field(default=30, ge=0)
    exact_max_n: int = Field(default=5, ge=2, le=7)
    guarantees: int = Field(default=100, ge=0)
    concave: int = Field(default=30, ge=0)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str, s: InstanceSet | None = None) -> None:
        if s is not None:
            what += " on " + " | ".join(format_masses(d.masses) for d in s.dists)
        logger.error(f"{self.name}: {what}")
        self.failures.append(what)


@dataclass
class VerifyReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> int:
        return sum(len(check.failures) for check in self.checks)

    def raise_for_failures(self) -> None:
        failed = [check.name for check in self.checks if not check.passed]
        if failed:
            raise InvariantError(f"{self.failures} failures in {', '.join(failed)}")


def _instances(
    seed: int, tag: int, count: int, ms: tuple[int, ...], ns: tuple[int, int]
) -> list[InstanceSet]:
    rng = make_rng(seed, tag)
    out = []
    for _ in range(count):
        m = int(rng.choice(ms))
        n = int(rng.integers(ns[0], ns[1] + 1))
        out.append(InstanceSet.from_lists([sample_simplex(rng, n) for _ in range(m)]))
    return out


def check_greedy(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("greedy-validity")
    for s in _instances(seed, 1, counts.greedy, (2, 3, 5), (1, 8)):
        result.cases += 1
        coupling, trace = greedy_coupling(s)
        report = validate_coupling(s, coupling)
        if not report.ok:
            result.fail(f"marginal violations {[str(v) for v in report.violations]}", s)
        if coupling.support_size > support_limit(s):
            result.fail(f"support {coupling.support_size} > {support_limit(s)}", s)
        masses = trace.masses
        if any(b > a for a, b in zip(masses, masses[1:], strict=False)):
            result.fail("step masses increase", s)
        for kind in ("simple", "advanced"):
            if rem_mass_violations(s, kind):
                result.fail(f"remaining mass above the {kind} certificate", s)
    return result


def check_bounds(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("bound-chain")
    slack = get_settings().thm_slack
    for s in _instances(seed, 2, counts.bounds, (2, 3, 5), (3, 8)):
        result.cases += 1
        values = {kind: lower_bound(s, kind) for kind in BOUND_KINDS}
        greedy = entropy(greedy_sizes(s))
        if not (
            values["zero"] <= values["meet"] + slack
            and values["meet"] <= values["major-profile"] + slack
            and values["profile"] <= values["major-profile"] + slack
            and values["major-profile"] <= greedy + slack
        ):
            result.fail(f"bound chain broken: {values}, greedy {greedy:.9f}", s)
        pc = profile_curve(s)
        if abs(profile_entropy(pc) - profile_transpose_entropy(pc)) > 1e-9:
            result.fail("profile entropy differs from its transpose", s)
        if not majorizes(majorization_meet(s).array, major_profile(pc).array):
            result.fail("meet does not majorize the major profile", s)
    return result


def check_exact(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("exact-agreement")
    slack = get_settings().thm_slack
    for s in _instances(seed, 3, counts.exact, (2,), (2, counts.exact_max_n)):
        result.cases += 1
        p, q = s.dists
        dp = dp_exact(p, q)
        values = {"dp": dp.value}
        if max(len(p), len(q)) <= ENUM_MAX_STATES:
            values["enum"] = vertex_enum_exact(p, q).value
        for kind in BOUND_KINDS:
            values[f"backtrack-{kind}"] = backtrack_exact(p, q, bound_kind=kind).value
        if max(values.values()) - min(values.values()) > 1e-9:
            result.fail(f"solvers disagree: {values}", s)
        if dp.value < lower_bound(s, "major-profile") - slack:
            result.fail("optimum below the major-profile bound", s)
        if dp.value > entropy(greedy_sizes(s)) + slack:
            result.fail("optimum above the greedy entropy", s)
        if dp.coupling is None:
            result.fail("dp returned no coupling", s)
            continue
        if not validate_coupling(s, dp.coupling).ok:
            result.fail("dp coupling breaks the marginals", s)
        if abs(coupling_entropy(dp.coupling) - dp.value) > 1e-9:
            result.fail("dp coupling entropy differs from its value", s)
        if dp.coupling.support_size > len(p) + len(q) - 1:
            result.fail(f"dp support {dp.coupling.support_size} too large", s)
        forest = check_forest_leaf_property(dp.coupling)
        if not forest.ok:
            result.fail(f"forest check: {forest.reason}", s)
    return result


def check_additive_guarantees(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("additive-guarantees")
    slack = get_settings().thm_slack
    constants = {m: small_m_constant(m).value for m in range(2, SMALL_M_MAX + 1)}
    for m, target in TABLE_TARGETS.items():
        value = constants[m] if m in constants else small_m_constant(m).value
        if abs(value - target) > TABLE_TOLERANCE:
            result.fail(f"constant for m={m} is {value:.6f}, expected about {target}")
    for s in _instances(seed, 4, counts.guarantees, (2, 3, 4, 5, 6), (2, 8)):
        result.cases += 1
        gap = entropy(greedy_sizes(s)) - profile_entropy(profile_curve(s))
        if gap > HALF_ONE_PLUS_LG_E + slack:
            result.fail(f"gap {gap:.9f} above (1 + lg e) / 2", s)
        if gap > constants[s.m] + 1e-6:
            result.fail(f"gap {gap:.9f} above the m={s.m} constant", s)
        if s.m == 2:
            if gap > LG_E_OVER_E + slack:
                result.fail(f"gap {gap:.9f} above lg(e)/e", s)
            if monovariant_violations(monovariant_trace(s), slack):
                result.fail("stepwise monovariant rose too fast", s)
    return result


def check_concave(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("concave-guarantees")
    half = CostFn.power(0.5)
    r = mult_ratio_two(half).extras["r"]
    if abs(r - 0.25) > 1e-6:
        result.fail(f"power(0.5) ratio r = {r}")
    if abs(mult_guarantee_general(0.5) - (0.5 + math.sqrt(2.0))) > 1e-6:
        result.fail("general power(0.5) factor off")
    for c in (0.3, 0.5, 0.7):
        f = CostFn.power(c)
        for s in _instances(seed, 5, counts.concave, (2, 3, 5), (2, 8)):
            result.cases += 1
            check = check_mult_guarantee(s, f)
            if not check.ok:
                result.fail(f"{f.name}: ratio {check.ratio:.9f} > factor {check.factor:.9f}", s)
    return result


def check_point_values(seed: int, counts: VerifyCounts) -> CheckResult:
    result = CheckResult("point-values")
    w = InstanceSet.from_lists([[0.5, 0.4, 0.1], [0.6, 0.2, 0.2]])
    result.cases += 1
    sizes = greedy_sizes(w).masses
    if not np.allclose(sizes, [0.5, 0.2, 0.2, 0.1], atol=1e-12):
        result.fail(f"greedy sizes {sizes}", w)
    single = InstanceSet.from_lists([[0.5, 0.4, 0.1]])
    if abs(rem_mass_simple(single, 0.3) - 0.7) > 1e-12:
        result.fail("simple remaining mass at 0.3")
    if abs(rem_mass_advanced(single, 0.3) - 0.55) > 1e-12:
        result.fail("advanced remaining mass at 0.3")
    for item in GAP_CATALOG:
        s = item.instance()
        result.cases += 1
        gap = evaluate_gap(s, item.objective)
        if item.expected is not None and abs(gap - item.expected) > 1e-5:
            result.fail(f"{item.name}: gap {gap:.7f}, expected {item.expected}")
        if item.ceiling is not None and gap > item.ceiling + 1e-9:
            result.fail(f"{item.name}: gap {gap:.7f} above {item.ceiling:.7f}")
    geo = gen_geometric_gap(40)
    result.cases += 1
    gap = entropy(greedy_sizes(geo)) - entropy(geo.dists[1])
    if abs(gap - 0.4) > 1e-6:
        result.fail(f"geometric gap {gap:.9f}")
    return result


def check_corruption(seed: int, counts: VerifyCounts) -> CheckResult:
    """A coupling with one inflated cell must be rejected."""
    result = CheckResult("corruption-detected")
    for s in _instances(seed, 6, max(counts.greedy // 10, 1), (2, 3), (2, 6)):
        result.cases += 1
        coupling, _ = greedy_coupling(s)
        first, *rest = coupling.entries
        bad = Coupling.from_pairs(
            [(first.indices, first.mass * 1.5)] + [(e.indices, e.mass) for e in rest]
        )
        if validate_coupling(s, bad).ok:
            result.fail("inflated cell passed validation", s)
    return result


CHECKS: dict[str, Callable[[int, VerifyCounts], CheckResult]] = {
    "greedy-validity": check_greedy,
    "bound-chain": check_bounds,
    "exact-agreement": check_exact,
    "additive-guarantees": check_additive_guarantees,
    "concave-guarantees": check_concave,
    "point-values": check_point_values,
}


def _run_check(name: str, seed: int, counts: VerifyCounts) -> CheckResult:
    return CHECKS[name](seed, counts)


def verify_suite(
    seed: int,
    counts: VerifyCounts | None = None,
    inject_corruption: bool = False,
    workers: int | None = None,
) -> VerifyReport:
    """Run every check; failures carry the offending instance."""
    counts = counts or VerifyCounts()
    workers = workers or get_settings().workers
    names = list(CHECKS)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_check, name, seed, counts) for name in names]
            checks = [future.result() for future in futures]
    else:
        checks = [_run_check(name, seed, counts) for name in names]
    if inject_corruption:
        checks.append(check_corruption(seed, counts))

    for check in checks:
        status = "ok" if check.passed else f"{len(check.failures)} failures"
        logger.info(f"{check.name}: {check.cases} cases, {status}")
    return VerifyReport(checks)

