"""Command line front end: `coaeps list` and `coaeps sweep`.

Exit codes: 0 success, 2 usage or configuration error, 3 sweep finished but
no feasible record survived, 4 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .benchmarks import VARIANTS, get_problem, list_problems, reference_front
from .coa import CoaConfig
from .epsilon import (
    epsilon_grid,
    estimate_epsilon_range,
    front_records,
    round_outward,
    run_sweep,
)
from .errors import (
    ConfigurationError,
    InfeasibleProblemError,
    UnsupportedReferenceError,
)
from .pareto import FrontPoint, generational_distance, spacing
from .report import (
    build_manifest,
    render_png_scatter,
    render_svg_scatter,
    write_csv,
    write_manifest,
)

SEED_ENV = "COAEPS_SEED"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coaeps",
        description="Constrained multi-objective sweeps: cuckoo-style search "
                    "over an epsilon grid.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="catalog the benchmark problems")
    p_list.add_argument("--json", action="store_true", help="machine-readable output")
    p_list.set_defaults(func=cmd_list)

    p_sweep = sub.add_parser("sweep", help="run one epsilon sweep and write reports")
    p_sweep.add_argument("-p", "--problem", type=int, required=True,
                         metavar="ID", help="benchmark id (1..9)")
    p_sweep.add_argument("--variant", choices=list(VARIANTS), default="canonical")
    p_sweep.add_argument("--keep", type=int, default=0, metavar="J",
                         help="objective index to keep (default 0)")
    p_sweep.add_argument("--eps-low", type=float, default=None)
    p_sweep.add_argument("--eps-high", type=float, default=None)
    p_sweep.add_argument("--pace", type=float, default=None)
    p_sweep.add_argument("--estimate-eps", action="store_true",
                         help="probe the epsilon range instead of using presets "
                              "(rounded outward to 2 decimals)")
    p_sweep.add_argument("--seed", type=int, default=None,
                         help=f"master seed (default ${SEED_ENV} or 0)")
    p_sweep.add_argument("--out", default=None, metavar="DIR",
                         help="output directory (default runs/p<ID>-<variant>)")
    p_sweep.add_argument("--no-filter", action="store_true",
                         help="keep all feasible records in front.csv")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--png", action="store_true",
                         help="also render front.png via matplotlib")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def cmd_list(args: argparse.Namespace) -> int:
    rows = list_problems()
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    header = f"{'id':>2}  {'name':<16} {'n':>1} {'k':>1} {'m':>1}  {'preset (low..high by pace)':<28} variants"
    print(header)
    for r in rows:
        preset = f"{r['preset']['low']:g}..{r['preset']['high']:g} by {r['preset']['pace']:g}"
        print(f"{r['id']:>2}  {r['name']:<16} {r['n']:>1} {r['k']:>1} {r['m']:>1}"
              f"  {preset:<28} {', '.join(r['variants'])}")
    return 0


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{SEED_ENV}={raw!r} is not an integer") from None


def cmd_sweep(args: argparse.Namespace) -> int:
    entry = get_problem(args.problem, args.variant)
    problem = entry.problem
    config = CoaConfig(seed=_resolve_seed(args))

    low, high = entry.preset_epsilon_low, entry.preset_epsilon_high
    pace = entry.preset_pace
    if args.estimate_eps and (args.eps_low is None or args.eps_high is None):
        held = 1 - args.keep if problem.k == 2 else None
        if held is None:
            raise ConfigurationError("--estimate-eps only supports two objectives")
        low, high = round_outward(*estimate_epsilon_range(problem, held, config))
    if args.eps_low is not None:
        low = args.eps_low
    if args.eps_high is not None:
        high = args.eps_high
    if args.pace is not None:
        pace = args.pace
    grid = epsilon_grid(low, high, pace)

    out_dir = args.out or os.path.join("runs", f"p{entry.id}-{entry.variant}")
    os.makedirs(out_dir, exist_ok=True)

    t0 = time.perf_counter()
    sweep = run_sweep(problem, args.keep, grid, config, workers=args.workers)
    duration_ms = (time.perf_counter() - t0) * 1e3
    front = front_records(sweep, filter=not args.no_filter)

    write_csv(sweep.records, os.path.join(out_dir, "records.csv"),
              problem.n, problem.k)
    write_csv(front, os.path.join(out_dir, "front.csv"), problem.n, problem.k)

    senses = problem.senses
    front_points = [FrontPoint(values=r.objective_values, senses=senses)
                    for r in front]
    spacing_value = spacing(front_points) if len(front_points) >= 2 else None
    gd_value = None
    reference = None
    if problem.k == 2:
        try:
            reference = reference_front(entry.id, entry.variant, samples=500)
        except UnsupportedReferenceError:
            reference = None
        if reference and front_points:
            gd_value = generational_distance(front_points, reference)

    manifest = build_manifest(
        problem_id=entry.id, variant=entry.variant, problem_name=problem.name,
        keep_index=args.keep, grid=grid, config=config,
        duration_ms=duration_ms, records_total=len(sweep.records),
        feasible_records=sum(1 for r in sweep.records if r.feasible),
        front_size=len(front), spacing_value=spacing_value,
        generational_distance_value=gd_value,
        filtered=not args.no_filter, workers=args.workers)
    write_manifest(manifest, os.path.join(out_dir, "manifest.json"))

    front_xy = np.array([r.objective_values for r in front]).reshape(-1, 2) \
        if problem.k == 2 else np.empty((0, 2))
    ref_xy = (np.array([p.values for p in reference])
              if reference else None)
    render_svg_scatter(front_xy, ref_xy, os.path.join(out_dir, "front.svg"))
    if args.png:
        render_png_scatter(front_xy, ref_xy, os.path.join(out_dir, "front.png"))

    print(f"{problem.name}: {len(sweep.records)} records, "
          f"{len(front)} front points -> {out_dir}")
    return 0 if front else 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
