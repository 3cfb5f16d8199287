"""Base solver interface for exact two-distribution couplings."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

from mec.core.models import SHANNON, Coupling, CostFn, Dist, InstanceSet
from mec.utils.errors import UnsupportedError


@dataclass
class SolveResult:
    """Result from an exact solve.

    `nodes` counts search nodes, DP states or enumerated trees depending on
    the solver. An incomplete result carries the best coupling found before
    the budget ran out, or none.
    """

    solver: str
    value: float
    coupling: Coupling | None
    complete: bool = True
    nodes: int = 0
    elapsed: float = 0.0
    cost: str = "shannon"

    @property
    def found(self) -> bool:
        return self.coupling is not None and math.isfinite(self.value)


class BaseSolver(ABC):
    """
    Abstract base class for exact solvers.

    Subclasses set `name` and `description` and implement `solve`.
    """

    name: str
    description: str
    supports_cost: bool = False

    @abstractmethod
    def solve(
        self,
        p: Dist,
        q: Dist,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        """Exact minimum-cost coupling of p and q."""

    def solve_instance(
        self,
        s: InstanceSet,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        if s.m != 2:
            raise UnsupportedError(f"exact solvers couple two distributions, got m={s.m}")
        if cost != SHANNON and not self.supports_cost:
            raise UnsupportedError(f"{self.name} minimizes entropy only")
        return self.solve(s.dists[0], s.dists[1], timeout=timeout, cost=cost)

    def __repr__(self) -> str:
        return f"<Solver: {self.name}>"
