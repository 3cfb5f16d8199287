"""Greedy coupling: repeatedly couple the largest remaining state of every distribution."""

import heapq
import logging
import sys
from dataclasses import dataclass

import numpy as np

from mec.core.models import EPS, Coupling, Dist, FloatArray, InstanceSet

logger = logging.getLogger(__name__)

_NO_STATE = sys.maxsize
_SWITCH_MARGIN = 1e-15


@dataclass(frozen=True)
class GreedyStep:
    """One allocation: `mass` taken from the states at `indices`."""

    mass: float
    indices: tuple[int, ...] | None
    remaining_before: float


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]

    @property
    def masses(self) -> list[float]:
        return [step.mass for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


class GreedyCoupler:
    """Step-at-a-time greedy run over an instance.

    Every top drops by the same mass each step, so tops are stored as
    `base - offset` with one shared offset. A min-heap over bases yields the
    next mass; a second heap, keyed by the offset at which a row's top falls
    to its next candidate, yields the rows that must switch states. Below the
    top, each distribution splits into untouched states (still sorted,
    consumed through a pointer) and a heap of partially consumed ones.
    """

    def __init__(self, s: InstanceSet, track_indices: bool = True):
        self._track = track_indices
        self._orig: list[list[float]] = [list(d.masses) for d in s.dists]
        self._ptr = [0] * s.m
        self._touched: list[list[tuple[float, int]]] = [[] for _ in range(s.m)]
        self._offset = 0.0
        self._base = [0.0] * s.m
        self._top_idx = [0] * s.m
        self._second = [0.0] * s.m
        self._second_idx = [0] * s.m
        self._version = [0] * s.m
        self._tops: list[tuple[float, int, int]] = []
        self._switches: list[tuple[float, int, int]] = []
        for k in range(s.m):
            self._load(k)
        self._remaining = s.total
        self.steps_taken = 0

    @property
    def remaining(self) -> float:
        return self._remaining

    def _peek(self, k: int) -> tuple[float, int]:
        best = (0.0, _NO_STATE)
        orig, ptr = self._orig[k], self._ptr[k]
        if ptr < len(orig):
            best = (orig[ptr], ptr)
        heap = self._touched[k]
        if heap:
            value, idx = -heap[0][0], heap[0][1]
            if value > best[0] or (value == best[0] and idx < best[1]):
                best = (value, idx)
        return best

    def _pop(self, k: int) -> tuple[float, int]:
        best = self._peek(k)
        if best[1] == _NO_STATE:
            return best
        # touched indices all lie below the pointer
        if best[1] == self._ptr[k]:
            self._ptr[k] += 1
        else:
            heapq.heappop(self._touched[k])
        return best

    def _load(self, k: int) -> None:
        """Make the largest remaining state of row k its top and index it."""
        value, idx = self._pop(k)
        self._base[k] = value + self._offset
        self._top_idx[k] = idx
        self._second[k], self._second_idx[k] = self._peek(k)
        self._version[k] += 1
        version = self._version[k]
        heapq.heappush(self._tops, (self._base[k], k, version))
        if idx != _NO_STATE:
            heapq.heappush(self._switches, (self._switch_at(k), k, version))

    def _switch_at(self, k: int) -> float:
        # slightly early; _is_stale has the final word
        return self._base[k] - max(self._second[k], EPS) - _SWITCH_MARGIN

    def _is_stale(self, k: int) -> bool:
        top = self._base[k] - self._offset
        second = self._second[k]
        return (
            top <= EPS
            or top < second
            or (top == second and self._second_idx[k] < self._top_idx[k])
        )

    def _advance(self, k: int) -> None:
        value = self._base[k] - self._offset
        if value > EPS:
            heapq.heappush(self._touched[k], (-value, self._top_idx[k]))
        self._load(k)

    def _min_base(self) -> float:
        tops, version = self._tops, self._version
        while version[tops[0][1]] != tops[0][2]:
            heapq.heappop(tops)
        return tops[0][0]

    def step(self) -> GreedyStep | None:
        """Allocate the next mass, or return None once the instance is used up."""
        if self._remaining <= EPS:
            return None
        base = self._min_base()
        r = base - self._offset
        if r <= EPS:
            return None
        indices = tuple(self._top_idx) if self._track else None
        before = self._remaining
        self._offset = base
        self._remaining -= r

        # each row switches at most once per step
        switches, version = self._switches, self._version
        due = []
        while switches and switches[0][0] <= base:
            _, k, v = heapq.heappop(switches)
            if version[k] == v:
                due.append(k)
        for k in due:
            if self._is_stale(k):
                self._advance(k)
            else:
                heapq.heappush(switches, (self._switch_at(k), k, version[k]))
        self.steps_taken += 1
        return GreedyStep(mass=r, indices=indices, remaining_before=before)

    def residuals(self) -> list[FloatArray]:
        """Remaining positive masses of each distribution, sorted non-increasing."""
        out = []
        for k in range(len(self._orig)):
            values = [-v for v, _ in self._touched[k]]
            values.extend(self._orig[k][self._ptr[k] :])
            top = self._base[k] - self._offset
            if top > EPS:
                values.append(top)
            out.append(np.sort(np.array(values, dtype=np.float64))[::-1])
        return out

    def run(self) -> GreedyTrace:
        steps = []
        while (step := self.step()) is not None:
            steps.append(step)
        return GreedyTrace(tuple(steps))


def greedy_coupling(s: InstanceSet) -> tuple[Coupling, GreedyTrace]:
    trace = GreedyCoupler(s).run()
    coupling = Coupling.from_pairs((step.indices or (), step.mass) for step in trace.steps)
    logger.debug(f"Greedy coupled m={s.m}, n={s.n} in {len(trace)} steps")
    return coupling, trace


def greedy_sizes(s: InstanceSet) -> Dist:
    """Sorted greedy entry masses, computed without index bookkeeping."""
    trace = GreedyCoupler(s, track_indices=False).run()
    return Dist.from_masses(trace.masses)
