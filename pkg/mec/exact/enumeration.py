"""Vertex enumeration over spanning trees of the complete bipartite state graph.

Every vertex of the transport polytope is induced by a spanning tree: peeling
leaves fixes each edge mass. Trees are enumerated rooted at the first left
state, as ordered partitions of the remaining vertices into child subtrees,
and a subtree is dropped as soon as its peeled edge mass is negative.
"""

import logging
import math
import time
from collections.abc import Iterator
from typing import Any

from mec.config import get_settings
from mec.core.models import EPS, SHANNON, Coupling, CostFn, Dist
from mec.exact.base import BaseSolver, SolveResult
from mec.utils.errors import SizeLimitError

logger = logging.getLogger(__name__)

# (child, parent, mass, child's own forest, sibling forest)
Forest = tuple[int, int, float, Any, Any] | None


class _Deadline(Exception):
    pass


def _flatten(forest: Forest) -> list[tuple[int, int, float]]:
    edges = []
    stack = [forest]
    while stack:
        node = stack.pop()
        if node is None:
            continue
        child, parent, mass, inner, siblings = node
        edges.append((child, parent, mass))
        stack.append(inner)
        stack.append(siblings)
    return edges


class _Enumerator:
    def __init__(self, p: Dist, q: Dist, cost: CostFn, deadline: float | None):
        self.n1 = len(p)
        self.size = len(p) + len(q)
        self.signed = list(p.masses) + [-x for x in q.masses]
        self.cost = cost
        self.deadline = deadline
        self.calls = 0

    def is_left(self, v: int) -> bool:
        return v < self.n1

    def _tick(self) -> None:
        self.calls += 1
        if (
            self.deadline is not None
            and self.calls % 256 == 0
            and time.perf_counter() > self.deadline
        ):
            raise _Deadline

    def _subtree_mass(self, mask: int, root: int) -> float:
        total = math.fsum(self.signed[v] for v in range(self.size) if mask >> v & 1)
        return total if self.is_left(root) else -total

    def forests(self, rest: int, parent: int) -> Iterator[tuple[float, Forest]]:
        """All feasible ways to hang the vertices of `rest` below `parent`."""
        if rest == 0:
            yield 0.0, None
            return
        self._tick()
        low = rest & -rest
        others = rest ^ low
        # subsets of `others`, each joined with the lowest vertex into one subtree
        sub = others
        while True:
            group = sub | low
            siblings: list[tuple[float, Forest]] | None = None
            for child in range(self.size):
                if not group >> child & 1 or self.is_left(child) == self.is_left(parent):
                    continue
                mass = self._subtree_mass(group, child)
                if mass < -EPS:
                    continue
                mass = max(mass, 0.0)
                edge_cost = float(self.cost.f_cost(mass))
                if siblings is None:
                    siblings = list(self.forests(rest ^ group, parent))
                if not siblings:
                    break
                for inner_cost, inner in self.forests(group ^ (1 << child), child):
                    for sib_cost, sib in siblings:
                        yield inner_cost + edge_cost + sib_cost, (child, parent, mass, inner, sib)
            if sub == 0:
                break
            sub = (sub - 1) & others

    def trees(self) -> Iterator[tuple[float, Forest]]:
        full = (1 << self.size) - 1
        return self.forests(full ^ 1, 0)


def vertex_enum_exact(
    p: Dist,
    q: Dist,
    cost: CostFn = SHANNON,
    timeout: float | None = None,
    max_vertices: int | None = None,
) -> SolveResult:
    """Minimum over every feasible spanning-tree vertex of the coupling polytope."""
    limit = max_vertices if max_vertices is not None else get_settings().enum_max_vertices
    vertices = len(p) + len(q)
    if vertices > limit:
        raise SizeLimitError("enum", vertices, limit)

    start = time.perf_counter()
    deadline = start + timeout if timeout is not None else None
    enumerator = _Enumerator(p, q, cost, deadline)
    best_value, best_forest, trees = math.inf, None, 0
    complete = True
    try:
        for value, forest in enumerator.trees():
            trees += 1
            if value < best_value:
                best_value, best_forest = value, forest
    except _Deadline:
        complete = False
        logger.warning(f"Vertex enumeration hit its {timeout}s budget after {trees} trees")
    elapsed = time.perf_counter() - start

    coupling = None
    if best_forest is not None:
        pairs = []
        for u, w, mass in _flatten(best_forest):
            left, right = (u, w) if enumerator.is_left(u) else (w, u)
            pairs.append(((left, right - enumerator.n1), mass))
        coupling = Coupling.from_pairs(pairs)
    logger.debug(f"Enumeration over {vertices} vertices: {trees} feasible trees, {elapsed:.3f}s")
    return SolveResult(
        solver="enum",
        value=best_value,
        coupling=coupling,
        complete=complete,
        nodes=trees,
        elapsed=elapsed,
        cost=cost.name,
    )


class EnumerationSolver(BaseSolver):
    """Exhaustive baseline."""

    name = "enum"
    description = "Naive enumeration of transport polytope vertices via spanning trees"
    supports_cost = True

    def solve(
        self,
        p: Dist,
        q: Dist,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        return vertex_enum_exact(p, q, cost=cost, timeout=timeout)
