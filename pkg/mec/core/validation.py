"""Marginal checks for couplings."""

import math
from collections import defaultdict
from dataclasses import dataclass

from mec.core.models import EPS, Coupling, InstanceSet
from mec.utils.errors import InvalidInputError, InvariantError


@dataclass(frozen=True)
class MarginalViolation:
    """State `i` of distribution `k` receives `actual` instead of `expected`."""

    k: int
    i: int
    expected: float
    actual: float

    def __str__(self) -> str:
        return f"(k={self.k}, i={self.i}): expected {self.expected:.12g}, got {self.actual:.12g}"


@dataclass(frozen=True)
class CouplingReport:
    violations: tuple[MarginalViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def raise_for_violations(self) -> None:
        if self.violations:
            worst = max(self.violations, key=lambda v: abs(v.actual - v.expected))
            raise InvariantError(f"{len(self.violations)} marginal violations, worst {worst}")


def validate_coupling(s: InstanceSet, c: Coupling) -> CouplingReport:
    """Check every marginal sum of `c` against `s` within m*n*EPS."""
    if c.entries and c.m != s.m:
        raise InvalidInputError(f"coupling has arity {c.m}, instance has {s.m} distributions")

    sums: list[defaultdict[int, list[float]]] = [defaultdict(list) for _ in range(s.m)]
    for entry in c.entries:
        for k, i in enumerate(entry.indices):
            if i >= len(s.dists[k]):
                raise InvalidInputError(
                    f"state index {i} out of range for distribution {k} "
                    f"({len(s.dists[k])} states)"
                )
            sums[k][i].append(entry.mass)

    tol = s.m * s.n * EPS
    violations = []
    for k, d in enumerate(s.dists):
        for i, expected in enumerate(d.masses):
            actual = math.fsum(sums[k].get(i, ()))
            if abs(actual - expected) > tol:
                violations.append(MarginalViolation(k, i, expected, actual))
    return CouplingReport(tuple(violations))


def support_limit(s: InstanceSet) -> int:
    """Largest support a vertex coupling of `s` can have."""
    return sum(len(d) for d in s.dists) - (s.m - 1)
