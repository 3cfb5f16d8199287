"""Branch-and-bound over leaf-peeling orders.

Some optimal coupling of two distributions is a forest whose heaviest edge
always touches a leaf, so it can be built by repeatedly coupling two residual
states in full, with non-increasing masses. The search enumerates those orders
and prunes with a lower bound on the residual instance.
"""

import logging
import math
import time
from collections import defaultdict

from mec.bounds.registry import BOUNDS, BoundKind
from mec.core.models import EPS, SHANNON, Coupling, CostFn, Dist
from mec.exact.base import BaseSolver, SolveResult

logger = logging.getLogger(__name__)


class _Deadline(Exception):
    pass


def _distinct_states(values: list[float]) -> list[tuple[float, int]]:
    """Positive states by decreasing mass, one representative per mass."""
    items = sorted(
        ((v, i) for i, v in enumerate(values) if v > 0.0),
        key=lambda item: (-item[0], item[1]),
    )
    out: list[tuple[float, int]] = []
    for v, i in items:
        if out and out[-1][0] - v <= EPS:
            continue
        out.append((v, i))
    return out


class _Search:
    def __init__(self, p: Dist, q: Dist, bound: BoundKind, deadline: float | None):
        self.p = list(p.masses)
        self.q = list(q.masses)
        self.bound_kind = bound
        self.bound = BOUNDS[bound]
        self.deadline = deadline
        self.best = math.inf
        self.best_path: list[tuple[int, int, float]] | None = None
        self.path: list[tuple[int, int, float]] = []
        self.nodes = 0

    def run(self) -> bool:
        try:
            self._visit(len(self.p), len(self.q), 0.0, math.inf)
        except _Deadline:
            return False
        return True

    def _candidates(self, last_mass: float) -> list[tuple[float, int, int]]:
        limit = last_mass + EPS
        out = []
        q_states = _distinct_states(self.q)
        for pv, i in _distinct_states(self.p):
            for qv, j in q_states:
                mass = pv if pv < qv else qv
                if mass <= limit:
                    out.append((mass, i, j))
        out.sort(key=lambda c: -c[0])
        return out

    def _visit(self, live_p: int, live_q: int, so_far: float, last_mass: float) -> None:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % 256 == 0
            and time.perf_counter() > self.deadline
        ):
            raise _Deadline

        finished = live_p == 0 or live_q == 0
        bound = 0.0 if finished or self.bound_kind == "zero" else self.bound((self.p, self.q))
        if so_far + bound >= self.best:
            return
        if finished:
            self.best = so_far
            self.best_path = list(self.path)
            return

        for mass, i, j in self._candidates(last_mass):
            pi, qj = self.p[i], self.q[j]
            new_p, new_q = pi - mass, qj - mass
            # residuals within EPS of zero are spent
            new_p = 0.0 if new_p <= EPS else new_p
            new_q = 0.0 if new_q <= EPS else new_q
            self.p[i], self.q[j] = new_p, new_q
            self.path.append((i, j, mass))
            self._visit(
                live_p - (new_p == 0.0),
                live_q - (new_q == 0.0),
                so_far + mass * -math.log2(mass),
                mass,
            )
            self.path.pop()
            self.p[i], self.q[j] = pi, qj


def backtrack_exact(
    p: Dist,
    q: Dist,
    bound_kind: BoundKind = "major-profile",
    timeout: float | None = None,
) -> SolveResult:
    """Minimum-entropy coupling of p and q by pruned backtracking."""
    start = time.perf_counter()
    deadline = start + timeout if timeout is not None else None
    search = _Search(p, q, bound_kind, deadline)
    complete = search.run()
    elapsed = time.perf_counter() - start

    coupling = None
    if search.best_path is not None:
        cells: defaultdict[tuple[int, int], float] = defaultdict(float)
        for i, j, mass in search.best_path:
            cells[(i, j)] += mass
        coupling = Coupling.from_pairs(cells.items())
    if not complete:
        logger.warning(
            f"Backtracking [{bound_kind}] hit its {timeout}s budget after {search.nodes} nodes"
        )
    logger.debug(f"Backtracking [{bound_kind}]: {search.nodes} nodes, {elapsed:.3f}s")
    return SolveResult(
        solver=f"backtrack-{bound_kind}",
        value=search.best,
        coupling=coupling,
        complete=complete,
        nodes=search.nodes,
        elapsed=elapsed,
    )


class BacktrackSolver(BaseSolver):
    """Backtracking with one lower bound for pruning."""

    def __init__(self, bound: BoundKind = "major-profile"):
        self.bound = bound
        self.name = f"backtrack-{bound}"
        self.description = f"Branch-and-bound over peeling orders, pruned by the {bound} bound"

    def solve(
        self,
        p: Dist,
        q: Dist,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        return backtrack_exact(p, q, bound_kind=self.bound, timeout=timeout)
