"""Scalarize a k-objective problem over an epsilon grid and assemble the front.

Each grid value keeps one objective and turns every other objective into an
inequality constraint (<= eps for minimize, >= eps for maximize). The engine
solves each sub-problem independently with its own generator seeded
master_seed XOR grid_index, so results never depend on worker count or run
order.
"""

from __future__ import annotations

import itertools
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .coa import CoaConfig, CoaRun, minimize
from .errors import ConfigurationError, InfeasibleProblemError, ToolkitWarning
from .pareto import FrontPoint, non_dominated_filter
from .problem import EvaluatedPoint, Problem, Sense, evaluate, normalize_constraint

MAX_SUBPROBLEMS = 100_000
_RANGE_SEED_SALT = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class ScalarizedProblem:
    base: Problem
    keep_index: int
    epsilons: tuple[float, ...]
    derived: Problem


@dataclass(frozen=True)
class EpsilonGrid:
    lower: float
    upper: float
    pace: float
    values: np.ndarray


@dataclass(frozen=True)
class SweepRecord:
    epsilon: float | tuple[float, ...]
    run: CoaRun
    objective_values: np.ndarray  # original senses, recomputed at the best point
    feasible: bool  # against the derived (epsilon-augmented) constraints


@dataclass(frozen=True)
class SweepResult:
    records: list[SweepRecord]
    problem: Problem
    keep_index: int
    config: CoaConfig

    @property
    def problem_name(self) -> str:
        return self.problem.name

    @property
    def senses(self) -> tuple[Sense, ...]:
        return self.problem.senses


def scalarize(problem: Problem, keep_index: int,
              epsilons: Sequence[float]) -> ScalarizedProblem:
    """Keep objective keep_index; bound each other objective by its epsilon."""
    if not (0 <= keep_index < problem.k):
        raise ValueError(f"keep_index {keep_index} out of range for k={problem.k}")
    epsilons = tuple(float(e) for e in epsilons)
    if len(epsilons) != problem.k - 1:
        raise ValueError(f"need {problem.k - 1} epsilon values, got {len(epsilons)}")
    if problem.k == 1:
        return ScalarizedProblem(base=problem, keep_index=0, epsilons=(),
                                 derived=problem)

    held = [j for j in range(problem.k) if j != keep_index]
    constraints = list(problem.constraints)
    for j, eps in zip(held, epsilons):
        sense, f = problem.objectives[j]
        kind = "le" if sense is Sense.MIN else "ge"
        op = "<=" if kind == "le" else ">="
        constraints.append(normalize_constraint(kind, f, eps,
                                                label=f"f{j + 1}{op}{eps:.17g}"))
    derived = Problem(
        name=f"{problem.name}|keep_f{keep_index + 1}",
        bounds=problem.bounds,
        objectives=(problem.objectives[keep_index],),
        constraints=tuple(constraints),
        vectorized=problem.vectorized,
    )
    return ScalarizedProblem(base=problem, keep_index=keep_index,
                             epsilons=epsilons, derived=derived)


def epsilon_grid(low: float, high: float, pace: float) -> EpsilonGrid:
    """Values low, low+pace, ... with count floor((high-low)/pace) + 1."""
    low, high, pace = float(low), float(high), float(pace)
    if pace <= 0:
        raise ConfigurationError("pace must be positive")
    if high < low:
        raise ValueError("high must be >= low")
    # absorb decimal round-off so 4/0.01 counts as 400 steps, not 399
    steps = math.floor((high - low) / pace + 1e-9)
    values = low + pace * np.arange(steps + 1)
    values.setflags(write=False)
    return EpsilonGrid(lower=low, upper=high, pace=pace, values=values)


def estimate_epsilon_range(problem: Problem, objective_index: int,
                           config: CoaConfig) -> tuple[float, float]:
    """Smallest and largest value objective_index reaches under the constraints.

    Runs the engine twice (minimizing, then maximizing) on the chosen
    objective subject to the problem's own constraints and returns the raw
    best values in the objective's original units.
    """
    if not (0 <= objective_index < problem.k):
        raise ValueError(f"objective_index {objective_index} out of range")
    _, f = problem.objectives[objective_index]

    results = []
    for sense, salt in ((Sense.MIN, 0), (Sense.MAX, _RANGE_SEED_SALT)):
        sub = Problem(name=f"{problem.name}|range_f{objective_index + 1}",
                      bounds=problem.bounds, objectives=((sense, f),),
                      constraints=problem.constraints,
                      vectorized=problem.vectorized)
        run = minimize(sub, problem.bounds, replace(config, seed=config.seed ^ salt))
        if not run.best.record.feasible:
            raise InfeasibleProblemError(
                f"no feasible point found while probing {problem.name}")
        results.append(float(run.best.record.objective_values[0]))
    return min(results), max(results)


def round_outward(low: float, high: float, decimals: int = 2) -> tuple[float, float]:
    """Widen (low, high) to the enclosing grid of 10**-decimals steps."""
    scale = 10.0 ** decimals
    lo = math.floor(low * scale + 1e-9) / scale
    hi = math.ceil(high * scale - 1e-9) / scale
    return lo, hi


def _solve_one(problem: Problem, keep_index: int, eps: tuple[float, ...],
               config: CoaConfig, index: int) -> SweepRecord:
    sub = scalarize(problem, keep_index, eps)
    run = minimize(sub.derived, problem.bounds,
                   replace(config, seed=int(config.seed) ^ index))
    x = run.best.position
    f_orig = np.array([float(f(x)) for _, f in problem.objectives])
    return SweepRecord(
        epsilon=eps[0] if len(eps) == 1 else eps,
        run=run,
        objective_values=f_orig,
        feasible=run.best.record.feasible,
    )


def run_sweep(problem: Problem, keep_index: int,
              grid: EpsilonGrid | Sequence[EpsilonGrid],
              config: CoaConfig, workers: int = 1) -> SweepResult:
    """Solve one scalarized sub-problem per grid value, in grid order.

    For k=2 pass a single grid; for k>2 pass one grid per held objective and
    the sweep walks their Cartesian product (bounded by MAX_SUBPROBLEMS).
    workers > 1 solves sub-problems concurrently without changing any result.
    """
    if isinstance(grid, EpsilonGrid):
        grids = [grid]
    else:
        grids = list(grid)
    if len(grids) != problem.k - 1:
        raise ValueError(f"need {problem.k - 1} grids, got {len(grids)}")
    total = math.prod(len(g.values) for g in grids)
    if total > MAX_SUBPROBLEMS:
        raise ConfigurationError(
            f"{total} sub-problems exceed the {MAX_SUBPROBLEMS} guard")
    if workers < 1:
        raise ConfigurationError("workers must be >= 1")

    combos = list(itertools.product(*[g.values.tolist() for g in grids]))
    if workers == 1:
        records = [_solve_one(problem, keep_index, eps, config, i)
                   for i, eps in enumerate(combos)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(
                lambda item: _solve_one(problem, keep_index, item[1], config, item[0]),
                enumerate(combos)))
    return SweepResult(records=records, problem=problem,
                       keep_index=keep_index, config=config)


def front_records(sweep: SweepResult, filter: bool = True) -> list[SweepRecord]:
    """Feasible records that survive dominance filtering, sorted by f1."""
    feasible = [r for r in sweep.records if r.feasible]
    if not feasible:
        warnings.warn(f"sweep of {sweep.problem_name} produced no feasible record",
                      ToolkitWarning, stacklevel=2)
        return []
    if not filter:
        return sorted(feasible, key=lambda r: r.objective_values[0])
    senses = sweep.senses
    points = [FrontPoint(values=r.objective_values, senses=senses,
                         payload=r.run.best.position) for r in feasible]
    kept = non_dominated_filter(points)
    # map filtered points back to their earliest source record, mirroring the
    # filter's keep-first duplicate rule
    first: dict[tuple[float, ...], SweepRecord] = {}
    for r in feasible:
        first.setdefault(tuple(r.objective_values.tolist()), r)
    return [first[tuple(p.values.tolist())] for p in kept]


def extract_front(sweep: SweepResult, filter: bool = True) -> list[EvaluatedPoint]:
    """Best points re-evaluated on the original problem (base constraints only)."""
    return [evaluate(sweep.problem, r.run.best.position)
            for r in front_records(sweep, filter=filter)]
