"""Solver registry for lookup by name."""

import logging

from mec.bounds.registry import BOUND_KINDS, parse_bound_kind
from mec.core.models import SHANNON, CostFn, InstanceSet
from mec.exact.base import BaseSolver, SolveResult
from mec.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

BACKTRACK_PREFIX = "backtrack-"

SOLVER_ALIASES: dict[str, str] = {
    "backtrack": "backtrack-major-profile",
    "backtracking": "backtrack-major-profile",
    "enumeration": "enum",
}


class SolverRegistry:
    """Registry for managing exact solvers."""

    def __init__(self) -> None:
        self._solvers: dict[str, BaseSolver] = {}

    def register(self, solver: BaseSolver) -> None:
        self._solvers[solver.name] = solver
        logger.debug(f"Registered solver: {solver.name}")

    def get(self, name: str) -> BaseSolver:
        """Get solver by name or alias."""
        key = name.strip().lower()
        key = SOLVER_ALIASES.get(key, key)
        solver = self._solvers.get(key)
        if solver is None:
            raise InvalidInputError(
                f"unknown solver {name!r}; choose from {', '.join(self.list_names())}"
            )
        return solver

    def resolve(self, name: str, bound: str | None = None) -> str:
        """Solver name after applying a backtracking bound override."""
        solver = self.get(name)
        if bound is None:
            return solver.name
        if not solver.name.startswith(BACKTRACK_PREFIX):
            raise InvalidInputError(f"a pruning bound applies only to backtrack, not {solver.name}")
        resolved = f"{BACKTRACK_PREFIX}{parse_bound_kind(bound)}"
        if name.strip().lower() not in SOLVER_ALIASES and solver.name != resolved:
            raise InvalidInputError(f"solver {solver.name} conflicts with bound {bound!r}")
        return self.get(resolved).name

    def list_names(self) -> list[str]:
        return list(self._solvers.keys())

    def list_solvers(self) -> list[BaseSolver]:
        return list(self._solvers.values())

    def solve(
        self,
        name: str,
        s: InstanceSet,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        solver = self.get(name)
        logger.info(f"Solving m={s.m}, n={s.n} with {solver.name}")
        return solver.solve_instance(s, timeout=timeout, cost=cost)


_registry: SolverRegistry | None = None


def get_registry() -> SolverRegistry:
    """Get or create the global solver registry."""
    global _registry
    if _registry is None:
        _registry = SolverRegistry()
        _register_default_solvers(_registry)
    return _registry


def _register_default_solvers(registry: SolverRegistry) -> None:
    from mec.exact.backtrack import BacktrackSolver
    from mec.exact.dp import DPSolver
    from mec.exact.enumeration import EnumerationSolver

    registry.register(EnumerationSolver())
    registry.register(DPSolver())
    for bound in BOUND_KINDS:
        registry.register(BacktrackSolver(bound))
