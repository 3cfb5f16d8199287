"""Runtime benchmark of the exact solvers over Dirichlet pairs."""

import csv
import logging
import statistics
import time
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from mec.bench.generators import dirichlet_pairs
from mec.exact.registry import get_registry
from mec.utils.errors import SizeLimitError

logger = logging.getLogger(__name__)

CSV_HEADER = ("algorithm", "n1", "n2", "runs", "mean_s", "stddev_s", "timeouts")
TIMEOUT_CELL = ">timeout"
DEFAULT_ALGORITHMS = (
    "enum",
    "dp",
    "backtrack-zero",
    "backtrack-meet",
    "backtrack-profile",
    "backtrack-major-profile",
)


class BenchConfig(BaseModel):
    """Solver matrix and shapes; every shape is (n1, n2)."""

    algorithms: list[str] = Field(default_factory=lambda: list(DEFAULT_ALGORITHMS))
    shapes: list[tuple[int, int]] = Field(default_factory=lambda: [(n, n) for n in range(4, 7)])
    runs: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    timeout: float = Field(default=120.0, gt=0)
    warmup: bool = True

    @field_validator("shapes")
    @classmethod
    def check_shapes(cls, v: list[tuple[int, int]]) -> list[tuple[int, int]]:
        for n1, n2 in v:
            if n1 < 1 or n2 < 1:
                raise ValueError(f"shape {n1}x{n2} has an empty side")
        return v

    @field_validator("algorithms")
    @classmethod
    def check_algorithms(cls, v: list[str]) -> list[str]:
        registry = get_registry()
        return [registry.get(name).name for name in v]


@dataclass(frozen=True)
class BenchRow:
    """Timing summary of one (algorithm, shape) cell; timed-out runs are excluded."""

    algorithm: str
    n1: int
    n2: int
    runs: int
    mean_s: float | None
    stddev_s: float | None
    timeouts: int

    def censored_mean(self, timeout: float) -> float:
        """Mean with each timed-out run counted at the budget, a lower bound on the true mean."""
        done = self.runs - self.timeouts
        total = (self.mean_s or 0.0) * done + self.timeouts * timeout
        return total / self.runs

    def as_csv(self) -> list[str]:
        mean = TIMEOUT_CELL if self.mean_s is None else f"{self.mean_s:.6f}"
        stddev = "" if self.stddev_s is None else f"{self.stddev_s:.6f}"
        return [self.algorithm, str(self.n1), str(self.n2), str(self.runs), mean, stddev,
                str(self.timeouts)]


def _bench_cell(algorithm: str, n1: int, n2: int, config: BenchConfig) -> BenchRow:
    solver = get_registry().get(algorithm)
    instances = dirichlet_pairs(n1, n2, config.runs, config.seed)
    times: list[float] = []
    timeouts = 0
    try:
        if config.warmup:
            solver.solve_instance(instances[0], timeout=config.timeout)
        for s in instances:
            start = time.perf_counter()
            result = solver.solve_instance(s, timeout=config.timeout)
            elapsed = time.perf_counter() - start
            if result.complete:
                times.append(elapsed)
            else:
                timeouts += 1
    except SizeLimitError as e:
        logger.warning(f"{algorithm} refused {n1}x{n2}: {e}")
        return BenchRow(algorithm, n1, n2, config.runs, None, None, config.runs)

    mean = statistics.fmean(times) if times else None
    stddev = statistics.pstdev(times) if times else None
    logger.info(f"{algorithm} {n1}x{n2}: mean {mean}, {timeouts} timeouts")
    return BenchRow(algorithm, n1, n2, config.runs, mean, stddev, timeouts)


def bench_runtimes(config: BenchConfig) -> list[BenchRow]:
    """Time every algorithm on every shape, one cell after another."""
    rows = []
    for n1, n2 in config.shapes:
        for algorithm in config.algorithms:
            rows.append(_bench_cell(algorithm, n1, n2, config))
    return rows


def write_csv(path: str | Path, rows: list[BenchRow]) -> None:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv())
