"""Registry of nine two-objective test problems with sweep presets.

Each id ships two variants. "as-printed" keeps the source table's formulas
verbatim, defects included; "canonical" applies the documented corrections
(orientation flips, restored exponents/signs) that make the feasible set and
front match the widely used forms of these problems. Both variants of an id
share the variable count and box. Reference fronts come from closed forms
where one exists and from a dense feasible-lattice oracle otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedReferenceError
from .pareto import FrontPoint, non_dominated_filter
from .problem import Bounds, Constraint, Problem, Sense, evaluate, normalize_constraint

VARIANTS = ("as-printed", "canonical")
PROBLEM_IDS = tuple(range(1, 10))

_LATTICE_2D = 600
_LATTICE_3D = 120


@dataclass(frozen=True)
class BenchmarkEntry:
    id: int
    variant: str
    problem: Problem
    preset_epsilon_low: float
    preset_epsilon_high: float
    preset_pace: float
    notes: str
    has_reference_front: bool = True


def _variant(name: str) -> str:
    v = name.strip().lower().replace("_", "-")
    if v not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {name!r}")
    return v


# --- problem builders -------------------------------------------------------
# Objective/constraint callables index x as x[0], x[1], ... and compose numpy
# ufuncs only, so they evaluate stacked (n, N) arrays too (vectorized=True).


def _build_1(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([0.0, 0.0], [5.0, 5.0])
    circle = lambda x: (x[0] - 2.0) ** 2 + (x[1] - 2.0) ** 2
    if variant == "canonical":
        cons = (normalize_constraint("le", circle, 4.0, label="disk<=4"),)
        notes = ("printed '4 <= (x2-2)^2+(x1-2)^2' flipped to the disk interior "
                 "<= 4 so the front is the lower-left boundary arc; witness (2,2)")
    else:
        cons = (normalize_constraint("ge", circle, 4.0, label="disk>=4"),)
        notes = ("verbatim exterior-of-disk reading; the front degenerates to "
                 "the single point (0,0)")
    problem = Problem(name=f"disk[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, lambda x: x[0]),
                                  (Sense.MIN, lambda x: x[1])),
                      constraints=cons, vectorized=True)
    return problem, notes, (2.0, 2.0)


def _build_2(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([0.0, 0.0], [5.0, 5.0])
    cons = (normalize_constraint("le", lambda x: (x[0] - 1.0) ** 3 + x[1], 0.0,
                                 label="cubic<=0"),)
    problem = Problem(name=f"cubic-wedge[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, lambda x: 2.0 * x[0] - x[1]),
                                  (Sense.MIN, lambda x: -x[0])),
                      constraints=cons, vectorized=True)
    notes = ("printed row is internally consistent; box upper bounds [5,5] "
             "added for the search (x1 > 1 is infeasible anyway); witness (0,0)")
    return problem, notes, (0.0, 0.0)


def _build_3(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([-1.0, -2.0], [2.0, 2.0])
    if variant == "canonical":
        cons = (normalize_constraint("le", lambda x: x[1] - x[0] ** 3 + 3.0 * x[0],
                                     0.0, label="x2<=x1^3-3x1"),)
        notes = ("printed '-x2 - 3x1x1^3 >= 0' read as the cubic "
                 "x2 <= x1^3 - 3x1; box [-1,2]x[-2,2] from 'x1 >= -1, x2 <= 2'; "
                 "the box corner (-1,-2) is feasible, so the filtered front "
                 "degenerates to that single point; witness (0,-2)")
    else:
        cons = (normalize_constraint("ge", lambda x: -x[1] - 3.0 * x[0] ** 4,
                                     0.0, label="-x2-3x1^4>=0"),)
        notes = "verbatim reading with 3x1*x1^3 = 3x1^4"
    problem = Problem(name=f"cubic-ridge[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, lambda x: x[0]),
                                  (Sense.MIN, lambda x: x[1])),
                      constraints=cons, vectorized=True)
    return problem, notes, (0.0, -2.0)


def _build_4(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([0.0, 0.0], [5.0, 3.0])
    f2 = lambda x: (x[0] - 5.0) ** 2 + (x[1] - 5.0) ** 2
    circle = lambda x: (x[0] - 5.0) ** 2 + x[1] ** 2
    if variant == "canonical":
        f1 = lambda x: 4.0 * x[0] ** 2 + 4.0 * x[1] ** 2
        cons = (normalize_constraint("le", circle, 25.0, label="(x1-5)^2+x2^2<=25"),)
        notes = ("f1 restored to the quadratic 4x1^2+4x2^2 and the printed "
                 "circle kept with <= orientation; box [0,5]x[0,3]; witness (5,3)")
    else:
        f1 = lambda x: 4.0 * x[0] + 4.0 * x[1]
        cons = (normalize_constraint("ge", circle, 25.0, label="(x1-5)^2+x2^2>=25"),)
        notes = "verbatim linear f1 = 4x1+4x2 and exterior circle >= 25"
    problem = Problem(name=f"binh-korn[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, f1), (Sense.MIN, f2)),
                      constraints=cons, vectorized=True)
    return problem, notes, (5.0, 3.0)


def _build_5(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([-5.0] * 3, [5.0] * 3)

    def f1(x):
        return (-10.0 * np.exp(-0.2 * np.sqrt(x[0] ** 2 + x[1] ** 2))
                - 10.0 * np.exp(-0.2 * np.sqrt(x[1] ** 2 + x[2] ** 2)))

    if variant == "canonical":
        def f2(x):
            return sum(np.abs(x[i]) ** 0.8 + 5.0 * np.sin(x[i] ** 3)
                       for i in range(3))
        notes = "x_i^0.8 read as |x_i|^0.8 (real-valued for negative x)"
    else:
        def f2(x):
            return sum(np.sign(x[i]) * np.abs(x[i]) ** 0.8
                       + 5.0 * np.sin(x[i] ** 3) for i in range(3))
        notes = ("verbatim x_i^0.8 evaluated as the sign-preserving odd power "
                 "sign(x)|x|^0.8; non-standard form")
    problem = Problem(name=f"kursawe[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, f1), (Sense.MIN, f2)),
                      vectorized=True)
    return problem, notes, (0.0, 0.0, 0.0)


def _build_6(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([0.0, 0.0], [math.pi, math.pi])
    # two-argument angle so x2 = 0 is well defined
    angle = lambda x: np.arctan2(x[0], x[1])
    if variant == "canonical":
        wiggle = lambda x: x[0] ** 2 + x[1] ** 2 - 1.0 - 0.1 * np.cos(16.0 * angle(x))
        cons = (normalize_constraint("ge", wiggle, 0.0, label="ring>=0"),
                normalize_constraint("le",
                                     lambda x: (x[0] - 0.5) ** 2 + (x[1] - 0.5) ** 2,
                                     0.5, label="half-disk<=0.5"))
        notes = ("restored ring constraint x1^2+x2^2-1-0.1cos(16*atan2(x1,x2)) >= 0 "
                 "and half-disk <= 0.5; witness (1, 0.5)")
        witness = (1.0, 0.5)
    else:
        cons = (Constraint(c=lambda x: (0.1 - 0.1 * x[1] ** 2 + x[0] ** 2)
                           - np.cos(16.0 * angle(x)), label="cos>=0.1-0.1x2^2+x1^2"),
                normalize_constraint("ge",
                                     lambda x: (x[1] - 0.5) ** 2 + (x[0] - 0.5) ** 2,
                                     -0.5, label=">=-0.5 (vacuous)"),
                normalize_constraint("ge", lambda x: x[1], math.pi, label="x2>=pi"))
        notes = ("verbatim constraints; x2 >= pi pins the feasible set to the "
                 "x2 = pi box edge, so every preset epsilon (<= 1.2) is "
                 "infeasible and sweeps come back empty")
        witness = (0.0, math.pi)
    problem = Problem(name=f"tnk[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, lambda x: x[0]),
                                  (Sense.MIN, lambda x: x[1])),
                      constraints=cons, vectorized=True)
    return problem, notes, witness


def _build_7(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([-4.0, -4.0], [4.0, 4.0])
    a = 1.0 / math.sqrt(2.0)
    f1 = lambda x: 1.0 - np.exp(-((x[0] - a) ** 2 + (x[1] - a) ** 2))
    f2 = lambda x: 1.0 - np.exp(-((x[0] + a) ** 2 + (x[1] + a) ** 2))
    problem = Problem(name=f"fonseca-fleming[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, f1), (Sense.MIN, f2)),
                      vectorized=True)
    notes = ("variants identical (row is consistent); preset range [-25, 1] "
             "far exceeds the attainable f2 in [0, 1), so most grid values "
             "record infeasible")
    return problem, notes, (0.0, 0.0)


def _build_8(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([0.1, 0.0], [1.0, 5.0])
    if variant == "canonical":
        cons = (normalize_constraint("ge", lambda x: 9.0 * x[0] + x[1], 6.0,
                                     label="9x1+x2>=6"),
                normalize_constraint("ge", lambda x: 9.0 * x[0] - x[1], 1.0,
                                     label="9x1-x2>=1"))
        notes = ("second printed constraint de-duplicated to 9x1 - x2 >= 1, "
                 "the standard pairing; witness (1, 2)")
    else:
        cons = (normalize_constraint("ge", lambda x: 9.0 * x[0] + x[1], 6.0,
                                     label="9x1+x2>=6"),
                normalize_constraint("ge", lambda x: 9.0 * x[0] + x[1], 1.0,
                                     label="9x1+x2>=1 (redundant)"))
        notes = "verbatim duplicated pair; the >= 1 copy is redundant"
    problem = Problem(name=f"constr[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, lambda x: x[0]),
                                  (Sense.MIN, lambda x: (1.0 + x[1]) / x[0])),
                      constraints=cons, vectorized=True)
    return problem, notes, (1.0, 2.0)


def _build_9(variant: str) -> tuple[Problem, str, tuple[float, ...]]:
    bounds = Bounds([-20.0, -20.0], [20.0, 20.0])
    f1 = lambda x: (x[0] - 2.0) ** 2 + (x[1] - 1.0) ** 2 + 2.0
    circle = lambda x: x[0] ** 2 + x[1] ** 2
    if variant == "canonical":
        f2 = lambda x: 9.0 * x[0] - (x[1] - 1.0) ** 2
        cons = (normalize_constraint("le", circle, 225.0, label="x1^2+x2^2<=225"),
                normalize_constraint("le", lambda x: x[0] - 3.0 * x[1], -10.0,
                                     label="x1-3x2<=-10"),)
        notes = ("printed '(x2-1)^2 - min f2 = 9x1' rearranged to "
                 "f2 = 9x1 - (x2-1)^2, circle flipped to the interior <= 225, "
                 "line restored to x1 - 3x2 <= -10; witness (-10, 5)")
    else:
        f2 = lambda x: (x[1] - 1.0) ** 2 - 9.0 * x[0]
        cons = (normalize_constraint("ge", circle, 225.0, label="x1^2+x2^2>=225"),
                normalize_constraint("ge", lambda x: 3.0 * x[1] - x[0], -10.0,
                                     label="3x2-x1>=-10"),)
        notes = ("verbatim: f2 = (x2-1)^2 - 9x1, exterior circle >= 225, "
                 "line 3x2 - x1 >= -10")
    problem = Problem(name=f"srn[{variant}]", bounds=bounds,
                      objectives=((Sense.MIN, f1), (Sense.MIN, f2)),
                      constraints=cons, vectorized=True)
    return problem, notes, (-10.0, 5.0)


_BUILDERS = {1: _build_1, 2: _build_2, 3: _build_3, 4: _build_4, 5: _build_5,
             6: _build_6, 7: _build_7, 8: _build_8, 9: _build_9}

# (low, high, pace) for the swept objective f2, verbatim presets
_PRESETS: dict[int, tuple[float, float, float]] = {
    1: (0.0, 4.0, 0.01),
    2: (-1.0, 0.0, 0.0025),
    3: (-2.0, 2.0, 0.01),
    4: (0.0, 50.0, 0.125),
    5: (-11.0, 20.0, 0.0775),
    6: (0.0, 1.2, 0.008),
    7: (-25.0, 1.0, 0.065),
    8: (1.0, 9.0, 0.02),
    9: (-196.0, 72.0, 2.68),
}


def get_problem(problem_id: int, variant: str = "canonical") -> BenchmarkEntry:
    """Construct a registry entry; canonical feasibility is witness-checked."""
    if problem_id not in _BUILDERS:
        raise ValueError(f"problem id must be in 1..9, got {problem_id}")
    v = _variant(variant)
    problem, notes, witness = _BUILDERS[problem_id](v)
    if v == "canonical":
        point = evaluate(problem, np.array(witness, dtype=float))
        if not point.feasible:
            raise AssertionError(
                f"witness {witness} infeasible for {problem.name}: "
                f"total violation {point.total_violation}")
    low, high, pace = _PRESETS[problem_id]
    return BenchmarkEntry(id=problem_id, variant=v, problem=problem,
                          preset_epsilon_low=low, preset_epsilon_high=high,
                          preset_pace=pace, notes=notes)


def list_problems() -> list[dict]:
    """Catalog rows (id ascending) describing both variants of each problem."""
    rows = []
    for pid in PROBLEM_IDS:
        entry = get_problem(pid, "canonical")
        p = entry.problem
        rows.append({
            "id": pid,
            "name": p.name.split("[")[0],
            "n": p.n,
            "k": p.k,
            "m": p.m,
            "variants": list(VARIANTS),
            "preset": {"low": entry.preset_epsilon_low,
                       "high": entry.preset_epsilon_high,
                       "pace": entry.preset_pace},
            "has_reference_front": entry.has_reference_front,
        })
    return rows


# --- reference fronts -------------------------------------------------------


def _thin(idx_sorted: np.ndarray, samples: int) -> np.ndarray:
    if len(idx_sorted) <= samples:
        return idx_sorted
    pick = np.unique(np.round(np.linspace(0, len(idx_sorted) - 1, samples)).astype(int))
    return idx_sorted[pick]


def _lattice_front(problem: Problem, grid_points: int, samples: int) -> list[FrontPoint]:
    axes = [np.linspace(problem.bounds.lower[i], problem.bounds.upper[i], grid_points)
            for i in range(problem.n)]
    mesh = np.meshgrid(*axes, indexing="ij")
    X = np.stack([m.ravel() for m in mesh])
    feas = np.ones(X.shape[1], dtype=bool)
    for con in problem.constraints:
        feas &= np.asarray(con.c(X)) <= 0.0  # oracle uses exact feasibility
    if not feas.any():
        raise UnsupportedReferenceError(
            f"no feasible lattice point for {problem.name}")
    Xf = X[:, feas]
    F1 = np.asarray(problem.objectives[0][1](Xf), dtype=float)
    F2 = np.asarray(problem.objectives[1][1](Xf), dtype=float)

    # 2-d lossless prefilter (both objectives minimize): sort by (f1, f2) and
    # keep strict running-minimum improvements in f2
    order = np.lexsort((F2, F1))
    f2s = F2[order]
    cummin = np.minimum.accumulate(f2s)
    keep = np.ones(len(order), dtype=bool)
    keep[1:] = f2s[1:] < cummin[:-1]
    idx = order[keep]
    idx = _thin(idx, max(samples, 2) * 4)

    senses = problem.senses
    points = [FrontPoint(values=np.array([F1[i], F2[i]]), senses=senses,
                         payload=Xf[:, i].copy()) for i in idx]
    front = non_dominated_filter(points)
    keep_idx = _thin(np.arange(len(front)), samples)
    return [front[i] for i in keep_idx]


def reference_front(problem_id: int, variant: str = "canonical",
                    samples: int = 500) -> list[FrontPoint]:
    """Sampled true front: closed form for canonical 1/2/8, lattice oracle otherwise.

    The lattice oracle enumerates an endpoint-inclusive grid over the box
    (600x600, or 120^3 for the three-variable problem), keeps exactly feasible
    points, and dominance-filters them.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    v = _variant(variant)
    entry = get_problem(problem_id, v)
    senses = entry.problem.senses

    if v == "canonical" and problem_id == 1:
        # f2 descending so f1 comes out ascending (fronts sort by f1)
        f2 = np.linspace(2.0, 0.0, samples)
        f1 = 2.0 - np.sqrt(np.maximum(0.0, 4.0 - (f2 - 2.0) ** 2))
        return [FrontPoint(values=np.array([a, b]), senses=senses,
                           payload=np.array([a, b]))
                for a, b in zip(f1, f2)]
    if v == "canonical" and problem_id == 2:
        t = np.linspace(0.0, 1.0, samples)  # t = x1 on the front
        x2 = (1.0 - t) ** 3
        f1 = 2.0 * t - x2
        f2 = -t
        return [FrontPoint(values=np.array([a, b]), senses=senses,
                           payload=np.array([x, y]))
                for a, b, x, y in zip(f1, f2, t, x2)]
    if v == "canonical" and problem_id == 8:
        f1 = np.linspace(7.0 / 18.0, 1.0, samples)  # f1 = x1 on the front
        x2 = np.maximum(0.0, 6.0 - 9.0 * f1)
        f2 = (1.0 + x2) / f1
        return [FrontPoint(values=np.array([a, b]), senses=senses,
                           payload=np.array([a, y]))
                for a, b, y in zip(f1, f2, x2)]

    grid = _LATTICE_3D if entry.problem.n == 3 else _LATTICE_2D
    return _lattice_front(entry.problem, grid, samples)
