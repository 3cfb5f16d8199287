"""Local search over instances, optionally annealed, to widen a gap between two quantities."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field, model_validator

from mec.bench.generators import make_rng, sample_simplex
from mec.bench.objectives import evaluate_gap, parse_objective
from mec.core.models import EPS, InstanceSet

logger = logging.getLogger(__name__)

MAX_OPT_STATES = 7


class GapSearchConfig(BaseModel):
    """Search budget, move mix and acceptance schedule.

    With `temperature` zero only improvements are kept. Otherwise each restart
    cools linearly from it to zero and accepts a loss g with probability
    exp(-g / T). `level_rate` is the share of moves that shift exactly half the
    difference between two states, leaving them tied.
    """

    objective: str = "greedy-meet"
    n: int = Field(default=5, ge=1, le=64)
    m: int = Field(default=2, ge=1, le=16)
    restarts: int = Field(default=4, ge=1, le=1000)
    steps: int = Field(default=2000, ge=0)
    delta_min: float = Field(default=1e-6, gt=0)
    delta_max: float = Field(default=1e-1, gt=0, lt=1)
    temperature: float = Field(default=0.0, ge=0)
    level_rate: float = Field(default=0.1, ge=0, le=1)
    fresh_restarts: bool = False
    seed: int = Field(default=0, ge=0)
    initial: list[list[float]] | None = None

    @model_validator(mode="after")
    def check_budget(self) -> "GapSearchConfig":
        left, right = parse_objective(self.objective)
        if "opt" in (left, right):
            if self.m != 2:
                raise ValueError("objectives with opt need m=2")
            if self.n > MAX_OPT_STATES:
                raise ValueError(f"objectives with opt need n <= {MAX_OPT_STATES}")
        if self.delta_min > self.delta_max:
            raise ValueError("delta_min exceeds delta_max")
        return self


@dataclass(frozen=True)
class GapResult:
    instance: InstanceSet
    gap: float
    evaluations: int
    accepted: int


def _perturb(
    s: InstanceSet, rng: np.random.Generator, lo: float, hi: float, level_rate: float = 0.0
) -> InstanceSet | None:
    """Level two states of one distribution, or move a log-uniform amount between them."""
    lists = [list(d.masses) for d in s.dists]
    k = int(rng.integers(len(lists)))
    masses = lists[k]
    if len(masses) < 2:
        return None
    i, j = (int(x) for x in rng.choice(len(masses), size=2, replace=False))
    if rng.random() < level_rate:
        if masses[i] == masses[j]:
            return None
        masses[i] = masses[j] = 0.5 * (masses[i] + masses[j])
        return InstanceSet.from_lists(lists)
    delta = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    masses[i] += delta
    masses[j] -= delta
    if masses[j] <= EPS:
        return None
    return InstanceSet.from_lists(lists)


def _accepts(gain: float, temperature: float, rng: np.random.Generator) -> bool:
    if gain > 0.0:
        return True
    if temperature <= 0.0:
        return False
    return rng.random() < math.exp(gain / temperature)


def local_search_gap(cfg: GapSearchConfig) -> GapResult:
    """Best instance found and its gap; restarts shrink the step scale."""
    rng = make_rng(cfg.seed)

    def fresh() -> InstanceSet:
        return InstanceSet.from_lists([sample_simplex(rng, cfg.n) for _ in range(cfg.m)])

    seed_instance = InstanceSet.from_lists(cfg.initial) if cfg.initial else fresh()
    best, best_gap = seed_instance, evaluate_gap(seed_instance, cfg.objective)
    evaluations, accepted = 1, 0

    for restart in range(cfg.restarts):
        current = fresh() if cfg.fresh_restarts and restart > 0 else best
        current_gap = evaluate_gap(current, cfg.objective) if current is not best else best_gap
        hi = max(cfg.delta_max / (restart + 1), cfg.delta_min)
        for step in range(cfg.steps):
            candidate = _perturb(current, rng, cfg.delta_min, hi, cfg.level_rate)
            if candidate is None:
                continue
            gap = evaluate_gap(candidate, cfg.objective)
            evaluations += 1
            temperature = cfg.temperature * (1.0 - step / cfg.steps)
            if _accepts(gap - current_gap, temperature, rng):
                current, current_gap = candidate, gap
                accepted += 1
                if gap > best_gap:
                    best, best_gap = candidate, gap
        logger.info(f"Restart {restart}: gap {current_gap:.6f}, best {best_gap:.6f}")

    return GapResult(instance=best, gap=best_gap, evaluations=evaluations, accepted=accepted)
