"""`mec gaps`: local search for large gaps, or the fixed gap catalog."""

import argparse
from typing import Any

from mec.bench.catalog import GAP_CATALOG
from mec.bench.local_search import GapSearchConfig, local_search_gap
from mec.bench.objectives import evaluate_gap
from mec.config import get_settings
from mec.core.io import save_instance
from mec.utils.formatting import format_masses, format_table


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("gaps", help="search for or replay entropy gaps")
    parser.add_argument("--objective", default="greedy-meet", help="<a>-<b>, e.g. opt-profile")
    parser.add_argument("--catalog", action="store_true", help="evaluate the fixed instances")
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--restarts", type=int, default=4)
    parser.add_argument("--steps", type=int, default=2000)
    parser.add_argument(
        "--temperature",
        type=float,
        default=0.0,
        help="initial acceptance temperature; 0 keeps only improvements",
    )
    parser.add_argument("--fresh-restarts", action="store_true")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--out", help="write the best instance JSON here")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.catalog:
        rows = []
        for item in GAP_CATALOG:
            gap = evaluate_gap(item.instance(), item.objective)
            rows.append((item.name, item.objective, gap, item.expected, item.ceiling))
        print(format_table(["instance", "objective", "gap", "expected", "ceiling"], rows))
        return 0

    cfg = GapSearchConfig(
        objective=args.objective,
        n=args.n,
        m=args.m,
        restarts=args.restarts,
        steps=args.steps,
        temperature=args.temperature,
        fresh_restarts=args.fresh_restarts,
        seed=get_settings().seed if args.seed is None else args.seed,
    )
    result = local_search_gap(cfg)
    print(f"objective:   {cfg.objective}")
    print(f"gap:         {result.gap:.6f} bits")
    print(f"evaluations: {result.evaluations} ({result.accepted} accepted)")
    for k, d in enumerate(result.instance.dists):
        print(f"p{k + 1}:          {format_masses(d.masses, precision=10)}")
    if args.out:
        save_instance(args.out, result.instance)
    return 0
