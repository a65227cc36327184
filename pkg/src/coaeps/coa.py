"""Cuckoo-style population search over a box.

Habitats lay eggs uniformly inside a per-habitat radius, the population is
capped to the fittest survivors, and everyone migrates a random fraction of
the way toward the best cluster's best habitat. Constraints enter through the
quadratic exterior penalty, so the engine itself only ever minimizes a scalar
fitness. All randomness flows through one seeded generator per run, which
makes runs bit-for-bit reproducible.
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, ToolkitWarning
from .problem import (
    Bounds,
    EvaluatedPoint,
    Problem,
    Sense,
    evaluate_batch,
    penalized_fitness,
)

# eggs landing this close (max-norm) to an existing habitat are discarded
DUPLICATE_EGG_TOL = 1e-9
_KMEANS_MAX_ROUNDS = 10


@dataclass(frozen=True)
class CoaConfig:
    """Engine knobs; defaults target small two-variable benchmark boxes.

    elr_alpha scales the egg-laying radius, and the effective alpha shrinks by
    elr_decay each iteration so late eggs fine-tune instead of re-exploring.
    Set elr_decay=1.0 for a fixed radius. The run stops early once the best
    fitness improves by less than convergence_epsilon across
    convergence_window consecutive iterations.
    """

    initial_population: int = 5
    egg_min: int = 2
    egg_max: int = 4
    clusters: int = 1
    max_population: int = 20
    max_iterations: int = 100
    elr_alpha: float = 1.0
    elr_decay: float = 0.97
    motion_scale: float = 1.0
    convergence_window: int = 15
    convergence_epsilon: float = 1e-9
    penalty_coefficient: float = 1e6
    seed: int = 0

    def __post_init__(self) -> None:
        if self.initial_population < 1:
            raise ConfigurationError("initial_population must be >= 1")
        if not (1 <= self.egg_min <= self.egg_max):
            raise ConfigurationError("need 1 <= egg_min <= egg_max")
        if self.clusters < 1:
            raise ConfigurationError("clusters must be >= 1")
        if self.max_population < self.initial_population:
            raise ConfigurationError("max_population must cover the initial population")
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be >= 1")
        if self.elr_alpha <= 0 or self.motion_scale <= 0:
            raise ConfigurationError("elr_alpha and motion_scale must be positive")
        if not (0.0 < self.elr_decay <= 1.0):
            raise ConfigurationError("elr_decay must lie in (0, 1]")
        if self.convergence_window < 1:
            raise ConfigurationError("convergence_window must be >= 1")
        if self.convergence_epsilon < 0:
            raise ConfigurationError("convergence_epsilon must be >= 0")
        if self.penalty_coefficient <= 0:
            raise ConfigurationError("penalty_coefficient must be positive")
        if not (0 <= int(self.seed) < 2 ** 64):
            raise ConfigurationError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class Habitat:
    position: np.ndarray
    egg_count: int
    fitness: float
    record: EvaluatedPoint


@dataclass(frozen=True)
class CoaRun:
    best: Habitat
    best_history: np.ndarray  # best-so-far fitness, entry 0 = after initialization
    iterations_used: int
    evaluations_used: int


def _as_problem(objective: Problem | Callable[[np.ndarray], float],
                bounds: Bounds) -> Problem:
    if isinstance(objective, Problem):
        if objective.k != 1:
            raise ValueError("engine needs a single-objective problem; scalarize first")
        return objective
    return Problem(name="objective", bounds=bounds,
                   objectives=((Sense.MIN, objective),))


def _sort_key(h: Habitat) -> tuple:
    return (h.fitness, tuple(h.position.tolist()))


def _best_habitat(population: Sequence[Habitat]) -> Habitat:
    return min(population, key=_sort_key)


def _make_habitats(problem: Problem, X: np.ndarray, egg_counts: np.ndarray,
                   sense_sign: float, penalty: float) -> list[Habitat]:
    F, V, total, feas = evaluate_batch(problem, X)
    out = []
    for i in range(X.shape[0]):
        rec = EvaluatedPoint(x=X[i], objective_values=F[i], violations=V[i],
                             total_violation=float(total[i]), feasible=bool(feas[i]))
        fit = penalized_fitness(rec, sense_sign * F[i, 0], penalty)
        out.append(Habitat(position=X[i], egg_count=int(egg_counts[i]),
                           fitness=fit, record=rec))
    return out


def initialize_population(problem: Problem, config: CoaConfig,
                          rng: np.random.Generator) -> list[Habitat]:
    """Uniform habitats in the box with egg counts in [egg_min, egg_max]."""
    bounds = problem.bounds
    sign = 1.0 if problem.objectives[0][0] is Sense.MIN else -1.0
    if np.all(bounds.lower == bounds.upper):
        warnings.warn("degenerate box: all bounds coincide, population collapses "
                      "to one habitat", ToolkitWarning, stacklevel=2)
        X = bounds.lower[None, :].copy()
        eggs = rng.integers(config.egg_min, config.egg_max + 1, size=1)
        return _make_habitats(problem, X, eggs, sign, config.penalty_coefficient)
    X = rng.uniform(bounds.lower, bounds.upper,
                    size=(config.initial_population, bounds.n))
    eggs = rng.integers(config.egg_min, config.egg_max + 1,
                        size=config.initial_population)
    return _make_habitats(problem, X, eggs, sign, config.penalty_coefficient)


def egg_laying_radius(egg_count: int, total_eggs: int, bounds: Bounds,
                      elr_alpha: float) -> np.ndarray:
    """Per-axis radius: alpha * (own eggs / total eggs) * box width."""
    if total_eggs <= 0:
        raise ValueError("total_eggs must be positive")
    if not (1 <= egg_count <= total_eggs):
        raise ValueError("egg_count must lie in [1, total_eggs]")
    return elr_alpha * (egg_count / total_eggs) * bounds.width


def lay_eggs(habitat: Habitat, radius: np.ndarray, bounds: Bounds,
             rng: np.random.Generator) -> np.ndarray:
    """egg_count positions uniform in the +/-radius box around the habitat, clamped."""
    offsets = rng.uniform(-radius, radius, size=(habitat.egg_count, bounds.n))
    return bounds.clip(habitat.position + offsets)


def select_goal(population: Sequence[Habitat], clusters: int,
                rng: np.random.Generator) -> np.ndarray:
    """Position of the best habitat inside the lowest-mean-fitness k-means group."""
    if not population:
        raise ValueError("population is empty")
    k = clusters
    if k > len(population):
        warnings.warn(f"clusters={k} exceeds population {len(population)}; reduced",
                      ToolkitWarning, stacklevel=2)
        k = len(population)
    if k == 1:
        return _best_habitat(population).position.copy()

    P = np.array([h.position for h in population])
    fit = np.array([h.fitness for h in population])
    centroids = P[rng.choice(len(population), size=k, replace=False)]
    assign = np.zeros(len(population), dtype=int)
    for _ in range(_KMEANS_MAX_ROUNDS):
        d2 = ((P[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_assign = d2.argmin(axis=1)
        if np.array_equal(new_assign, assign):
            assign = new_assign
            break
        assign = new_assign
        for c in range(k):
            members = assign == c
            if members.any():
                centroids[c] = P[members].mean(axis=0)

    group_means = np.array([fit[assign == c].mean() if (assign == c).any() else np.inf
                            for c in range(k)])
    best_group = int(group_means.argmin())
    members = [h for h, a in zip(population, assign) if a == best_group]
    return _best_habitat(members).position.copy()


def migrate(position: np.ndarray, goal: np.ndarray, motion_scale: float,
            bounds: Bounds, rng: np.random.Generator) -> np.ndarray:
    """Move a uniform random fraction of the way toward the goal, per axis."""
    u = rng.uniform(0.0, 1.0, size=position.size)
    return bounds.clip(position + motion_scale * u * (goal - position))


def cap_population(population: Sequence[Habitat], max_population: int) -> list[Habitat]:
    """Fittest survivors; stable sort, fitness ties broken by lexicographic position."""
    return sorted(population, key=_sort_key)[:max_population]


def _drop_duplicate_eggs(eggs: np.ndarray, positions: np.ndarray) -> np.ndarray:
    """Drop eggs within DUPLICATE_EGG_TOL (max-norm) of a habitat or an earlier kept egg."""
    if not len(eggs):
        return eggs
    near_habitat = (np.abs(eggs[:, None, :] - positions[None, :, :]).max(axis=2)
                    .min(axis=1) < DUPLICATE_EGG_TOL)
    D = np.abs(eggs[:, None, :] - eggs[None, :, :]).max(axis=2)
    np.fill_diagonal(D, np.inf)
    if not near_habitat.any() and D.min() >= DUPLICATE_EGG_TOL:
        return eggs
    keep = []
    for i in range(len(eggs)):
        if near_habitat[i]:
            continue
        if keep and D[i, keep].min() < DUPLICATE_EGG_TOL:
            continue
        keep.append(i)
    return eggs[keep]


def minimize(objective: Problem | Callable[[np.ndarray], float],
             bounds: Bounds, config: CoaConfig) -> CoaRun:
    """Run the full egg-laying/migration loop and return the best-ever habitat.

    The returned best is elite-preserved across iterations even when migration
    or capping displaces it from the population, and best_history (one leading
    entry after initialization, then one per iteration) is monotone
    nonincreasing. Identical (objective, bounds, config) inputs reproduce the
    run exactly.
    """
    problem = _as_problem(objective, bounds)
    bounds = problem.bounds
    sign = 1.0 if problem.objectives[0][0] is Sense.MIN else -1.0
    penalty = config.penalty_coefficient
    rng = np.random.default_rng(int(config.seed))

    population = initialize_population(problem, config, rng)
    evaluations = len(population)
    best = _best_habitat(population)
    history = [best.fitness]

    iterations = 0
    for t in range(1, config.max_iterations + 1):
        iterations = t
        alpha_t = config.elr_alpha * config.elr_decay ** (t - 1)
        total_eggs = sum(h.egg_count for h in population)

        # egg laying, with near-duplicate eggs discarded
        batches = []
        for h in population:
            radius = egg_laying_radius(h.egg_count, total_eggs, bounds, alpha_t)
            batches.append(lay_eggs(h, radius, bounds, rng))
        eggs = np.concatenate(batches, axis=0)
        X = _drop_duplicate_eggs(eggs, np.array([h.position for h in population]))
        if len(X):
            counts = rng.integers(config.egg_min, config.egg_max + 1, size=len(X))
            newborns = _make_habitats(problem, X, counts, sign, penalty)
            evaluations += len(newborns)
            population = list(population) + newborns
        population = cap_population(population, config.max_population)

        # migration toward the selected goal (the goal habitat stays put)
        goal = select_goal(population, config.clusters, rng)
        moved = np.array([migrate(h.position, goal, config.motion_scale, bounds, rng)
                          for h in population])
        counts = np.array([h.egg_count for h in population])
        population = _make_habitats(problem, moved, counts, sign, penalty)
        evaluations += len(population)

        contender = _best_habitat(population)
        if contender.fitness < best.fitness:
            best = contender
        history.append(best.fitness)

        w = config.convergence_window
        if len(history) > w and history[-1 - w] - history[-1] < config.convergence_epsilon:
            break

    return CoaRun(best=best, best_history=np.array(history),
                  iterations_used=iterations, evaluations_used=evaluations)
