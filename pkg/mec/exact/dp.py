"""Bitmask dynamic programming over rooted spanning trees.

Vertices are the states of both distributions: left states on bits 0..n1-1,
right states on bits n1..n1+n2-1. dp[v, S] is the least cost of a tree
spanning S in which every vertex except the root v has been fully peeled.
The root keeps rem(S, v), the signed mass sum of S seen from v's side.
"""

import logging
import math
import time

import numpy as np

from mec.config import get_settings
from mec.core.models import EPS, SHANNON, Coupling, CostFn, Dist, FloatArray
from mec.exact.base import BaseSolver, SolveResult
from mec.utils.errors import SizeLimitError

logger = logging.getLogger(__name__)


def _submasks(members: list[int]) -> np.ndarray:
    subs = np.zeros(1, dtype=np.int64)
    for v in members:
        subs = np.concatenate((subs, subs | (1 << v)))
    return subs


class _Table:
    def __init__(self, p: Dist, q: Dist, cost: CostFn):
        self.n1 = len(p)
        self.size = len(p) + len(q)
        self.cost = cost
        signed = np.array(list(p.masses) + [-x for x in q.masses], dtype=np.float64)
        masks = np.arange(1 << self.size, dtype=np.int64)
        sigma = np.zeros(1 << self.size)
        for v in range(self.size):
            sigma += signed[v] * ((masks >> v) & 1)
        self.sigma: FloatArray = sigma
        self.dp: FloatArray = np.full((self.size, 1 << self.size), np.inf)
        self.states = 0

    def is_left(self, v: int) -> bool:
        return v < self.n1

    def rem(self, mask: int, v: int) -> float:
        value = float(self.sigma[mask])
        return value if self.is_left(v) else -value

    def edge_cost(self, mass: float) -> float:
        return float(self.cost.f_cost(max(mass, 0.0)))

    def members(self, mask: int) -> list[int]:
        return [v for v in range(self.size) if mask >> v & 1]

    def attach(self, mask: int, v: int, members: list[int]) -> tuple[float, int]:
        """Best (cost, child root) with v as a new root over mask minus v."""
        rest = mask ^ (1 << v)
        children = [u for u in members if u != v and self.is_left(u) != self.is_left(v)]
        if not children:
            return math.inf, -1
        # every child root sits on the same side, so they share one edge mass
        mass = self.rem(rest, children[0])
        if mass < -EPS:
            return math.inf, -1
        values = self.dp[children, rest]
        k = int(np.argmin(values))
        return float(values[k]) + self.edge_cost(mass), children[k]

    def merge(self, mask: int, v: int, subs: np.ndarray) -> tuple[float, int]:
        """Best (cost, first part) splitting v's children into two groups."""
        rest = mask ^ (1 << v)
        low = rest & -rest
        sel = subs[(((subs >> v) & 1) == 1) & ((subs & low) != 0) & (subs != mask)]
        if sel.size == 0:
            return math.inf, -1
        values = self.dp[v, sel] + self.dp[v, (mask ^ sel) | (1 << v)]
        k = int(np.argmin(values))
        return float(values[k]), int(sel[k])

    def fill(self) -> None:
        for mask in range(1, 1 << self.size):
            members = self.members(mask)
            if len(members) == 1:
                self.dp[members[0], mask] = 0.0
                self.states += 1
                continue
            subs = _submasks(members) if len(members) >= 3 else None
            for v in members:
                if self.rem(mask, v) < -EPS:
                    continue
                best, _ = self.attach(mask, v, members)
                if subs is not None:
                    best = min(best, self.merge(mask, v, subs)[0])
                self.dp[v, mask] = best
                self.states += 1

    def answer(self) -> tuple[float, int]:
        full = (1 << self.size) - 1
        values = self.dp[:, full]
        v = int(np.argmin(values))
        return float(values[v]), v

    def edges(self, mask: int, v: int) -> list[tuple[int, int, float]]:
        """Recover the tree behind dp[v, mask] as (u, w, mass) edges."""
        members = self.members(mask)
        if len(members) == 1:
            return []
        attached, child = self.attach(mask, v, members)
        merged, part = (math.inf, -1)
        if len(members) >= 3:
            merged, part = self.merge(mask, v, _submasks(members))
        if attached <= merged:
            rest = mask ^ (1 << v)
            mass = max(self.rem(rest, child), 0.0)
            return self.edges(rest, child) + [(child, v, mass)]
        other = (mask ^ part) | (1 << v)
        return self.edges(part, v) + self.edges(other, v)

    def coupling(self, root: int) -> Coupling:
        pairs = []
        for u, w, mass in self.edges((1 << self.size) - 1, root):
            left, right = (u, w) if self.is_left(u) else (w, u)
            pairs.append(((left, right - self.n1), mass))
        return Coupling.from_pairs(pairs)


def dp_exact(
    p: Dist,
    q: Dist,
    cost: CostFn = SHANNON,
    reconstruct: bool = True,
    max_vertices: int | None = None,
) -> SolveResult:
    """Exact minimum-cost coupling by subset DP over spanning trees."""
    limit = max_vertices if max_vertices is not None else get_settings().dp_max_vertices
    vertices = len(p) + len(q)
    if vertices > limit:
        raise SizeLimitError("dp", vertices, limit)

    start = time.perf_counter()
    table = _Table(p, q, cost)
    table.fill()
    value, root = table.answer()
    coupling = table.coupling(root) if reconstruct else None
    elapsed = time.perf_counter() - start
    logger.debug(f"DP over {vertices} vertices: {table.states} states, {elapsed:.3f}s")
    return SolveResult(
        solver="dp",
        value=value,
        coupling=coupling,
        nodes=table.states,
        elapsed=elapsed,
        cost=cost.name,
    )


class DPSolver(BaseSolver):
    """Subset DP; all-or-nothing, so the timeout is ignored."""

    name = "dp"
    description = "Bitmask DP over rooted spanning trees of the state graph"
    supports_cost = True

    def solve(
        self,
        p: Dist,
        q: Dist,
        timeout: float | None = None,
        cost: CostFn = SHANNON,
    ) -> SolveResult:
        return dp_exact(p, q, cost=cost)
