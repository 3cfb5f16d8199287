"""Instance generators, gap search, runtime benchmarks and the verification sweep."""

from mec.bench.catalog import GAP_CATALOG, GapInstance, get_gap_instance
from mec.bench.generators import (
    CoarseningFamily,
    dirichlet_pairs,
    gen_coarsening_family,
    gen_dirichlet,
    gen_fib_lucas,
    gen_geometric_gap,
    gen_uniform_family,
    make_rng,
)
from mec.bench.harness import BenchConfig, BenchRow, bench_runtimes, write_csv
from mec.bench.local_search import GapResult, GapSearchConfig, local_search_gap
from mec.bench.objectives import QUANTITIES, evaluate_gap, parse_objective
from mec.bench.verify import CheckResult, VerifyCounts, VerifyReport, verify_suite

__all__ = [
    "GAP_CATALOG",
    "QUANTITIES",
    "BenchConfig",
    "BenchRow",
    "CheckResult",
    "CoarseningFamily",
    "GapInstance",
    "GapResult",
    "GapSearchConfig",
    "VerifyCounts",
    "VerifyReport",
    "bench_runtimes",
    "dirichlet_pairs",
    "evaluate_gap",
    "gen_coarsening_family",
    "gen_dirichlet",
    "gen_fib_lucas",
    "gen_geometric_gap",
    "gen_uniform_family",
    "get_gap_instance",
    "local_search_gap",
    "make_rng",
    "parse_objective",
    "verify_suite",
    "write_csv",
]
