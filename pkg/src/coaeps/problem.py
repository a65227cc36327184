"""Problem model: box bounds, objective senses, normalized constraints, evaluation.

Every constraint is stored in the normalized form ``c(x) <= 0`` and every
maximize objective is negated once at construction, so downstream code only
ever minimizes non-positive-violation problems.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ConfigurationError

FEASIBILITY_TOL = 1e-6

# Callables take a decision vector indexed as x[0], x[1], ... ; problems that
# set vectorized=True promise they also accept a stacked (n, N) array.
ScalarFn = Callable[[np.ndarray], float]


class Sense(Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class Bounds:
    """Finite box: lower[i] <= x[i] <= upper[i]."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        lo = np.atleast_1d(np.asarray(self.lower, dtype=float))
        hi = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lo.shape != hi.shape or lo.ndim != 1 or lo.size == 0:
            raise ValueError("bounds must be two equal-length 1-d vectors")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise ValueError("bounds must be finite")
        if np.any(lo > hi):
            raise ValueError("lower bound exceeds upper bound")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def n(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass(frozen=True)
class Constraint:
    """Normalized inequality c(x) <= 0."""

    c: ScalarFn
    label: str = ""


def normalize_constraint(kind: str, g: ScalarFn, b: float, label: str = "") -> Constraint:
    """Turn ``g(x) <= b`` (kind="le") or ``g(x) >= b`` (kind="ge") into c(x) <= 0."""
    b = float(b)
    k = kind.lower()
    if k == "le":
        fn = lambda x, _g=g, _b=b: _g(x) - _b
        tag = label or f"g<= {b:g}"
    elif k == "ge":
        fn = lambda x, _g=g, _b=b: _b - _g(x)
        tag = label or f"g>= {b:g}"
    else:
        raise ValueError(f"kind must be 'le' or 'ge', got {kind!r}")
    return Constraint(c=fn, label=tag)


def _negated(f: ScalarFn) -> ScalarFn:
    return lambda x: -f(x)


@dataclass(frozen=True)
class Problem:
    """k objectives with senses, m normalized constraints, one finite box."""

    name: str
    bounds: Bounds
    objectives: tuple[tuple[Sense, ScalarFn], ...]
    constraints: tuple[Constraint, ...] = ()
    vectorized: bool = False
    # sign-adjusted objectives (MAX negated once); everything downstream minimizes
    minimized: tuple[ScalarFn, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        objectives = tuple(self.objectives)
        constraints = tuple(self.constraints)
        if not objectives:
            raise ValueError("problem needs at least one objective")
        for sense, _ in objectives:
            if not isinstance(sense, Sense):
                raise ValueError("objective sense must be a Sense member")
        mins = tuple(f if s is Sense.MIN else _negated(f) for s, f in objectives)
        object.__setattr__(self, "objectives", objectives)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "minimized", mins)

    @property
    def n(self) -> int:
        return self.bounds.n

    @property
    def k(self) -> int:
        return len(self.objectives)

    @property
    def m(self) -> int:
        return len(self.constraints)

    @property
    def senses(self) -> tuple[Sense, ...]:
        return tuple(s for s, _ in self.objectives)


@dataclass(frozen=True)
class EvaluatedPoint:
    """One decision vector with objective values and constraint diagnostics."""

    x: np.ndarray
    objective_values: np.ndarray
    violations: np.ndarray
    total_violation: float
    feasible: bool


def evaluate(problem: Problem, x: Sequence[float] | np.ndarray,
             tol: float = FEASIBILITY_TOL) -> EvaluatedPoint:
    """Evaluate all objectives and violations at x; feasible iff total <= tol."""
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise ValueError(f"expected {problem.n} variables, got shape {x.shape}")
    if problem.vectorized:
        # Route through the array ufunc path so single-point and batched
        # evaluation agree bit for bit (scalar ** and array ** can differ
        # by one ulp, enough to flip a feasibility flag at the tolerance).
        col = x[:, None]
        fs = np.array([np.asarray(f(col), dtype=float).reshape(-1)[0]
                       for _, f in problem.objectives])
        raw = np.asarray([np.asarray(c.c(col), dtype=float).reshape(-1)[0]
                          for c in problem.constraints], dtype=float)
        viol = np.maximum(0.0, raw)
    else:
        fs = np.array([float(f(x)) for _, f in problem.objectives])
        viol = np.array([max(0.0, float(c.c(x))) for c in problem.constraints])
    total = float(viol.sum())
    return EvaluatedPoint(
        x=x, objective_values=fs, violations=viol,
        total_violation=total, feasible=total <= tol,
    )


def evaluate_batch(problem: Problem, X: np.ndarray, tol: float = FEASIBILITY_TOL,
                   ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate N stacked points at once.

    X has shape (N, n). Returns (F, V, total, feasible) with shapes
    (N, k), (N, m), (N,), (N,). Problems with vectorized=True are evaluated
    with whole-array calls; otherwise this loops over `evaluate`.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != problem.n:
        raise ValueError(f"expected shape (N, {problem.n}), got {X.shape}")
    N = X.shape[0]
    if problem.vectorized:
        XT = X.T
        F = np.empty((N, problem.k))
        for j, (_, f) in enumerate(problem.objectives):
            F[:, j] = np.broadcast_to(np.asarray(f(XT), dtype=float), (N,))
        V = np.empty((N, problem.m))
        for j, con in enumerate(problem.constraints):
            V[:, j] = np.maximum(0.0, np.broadcast_to(np.asarray(con.c(XT), dtype=float), (N,)))
    else:
        F = np.empty((N, problem.k))
        V = np.empty((N, problem.m))
        for i in range(N):
            pt = evaluate(problem, X[i], tol)
            F[i] = pt.objective_values
            V[i] = pt.violations
    total = V.sum(axis=1)
    return F, V, total, total <= tol


def penalized_fitness(point: EvaluatedPoint, kept_objective_value: float,
                      penalty_coefficient: float) -> float:
    """Quadratic exterior penalty: kept value plus C * sum(violations^2).

    The kept value must already be in minimize sense (maximize objectives are
    negated at problem construction).
    """
    if penalty_coefficient <= 0:
        raise ConfigurationError("penalty_coefficient must be positive")
    v = point.violations
    return float(kept_objective_value + penalty_coefficient * float(np.dot(v, v)))
