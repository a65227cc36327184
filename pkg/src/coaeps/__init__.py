"""Constrained multi-objective optimization: cuckoo-style search over an
epsilon-constraint sweep, with Pareto tools, benchmark problems, and reporting."""

from .benchmarks import (
    BenchmarkEntry,
    get_problem,
    list_problems,
    reference_front,
)
from .coa import (
    CoaConfig,
    CoaRun,
    Habitat,
    cap_population,
    egg_laying_radius,
    initialize_population,
    lay_eggs,
    migrate,
    minimize,
    select_goal,
)
from .epsilon import (
    EpsilonGrid,
    ScalarizedProblem,
    SweepRecord,
    SweepResult,
    epsilon_grid,
    estimate_epsilon_range,
    extract_front,
    front_records,
    round_outward,
    run_sweep,
    scalarize,
)
from .errors import (
    ConfigurationError,
    InfeasibleProblemError,
    MetricError,
    ToolkitWarning,
    UnsupportedPlotError,
    UnsupportedReferenceError,
)
from .pareto import (
    FrontPoint,
    dominates,
    generational_distance,
    non_dominated_filter,
    spacing,
)
from .problem import (
    FEASIBILITY_TOL,
    Bounds,
    Constraint,
    EvaluatedPoint,
    Problem,
    Sense,
    evaluate,
    evaluate_batch,
    normalize_constraint,
    penalized_fitness,
)
from .report import (
    build_manifest,
    csv_header,
    render_png_scatter,
    render_svg_scatter,
    write_csv,
    write_manifest,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkEntry", "get_problem", "list_problems", "reference_front",
    "CoaConfig", "CoaRun", "Habitat", "cap_population", "egg_laying_radius",
    "initialize_population", "lay_eggs", "migrate", "minimize", "select_goal",
    "EpsilonGrid", "ScalarizedProblem", "SweepRecord", "SweepResult",
    "epsilon_grid", "estimate_epsilon_range", "extract_front", "front_records",
    "round_outward", "run_sweep", "scalarize",
    "ConfigurationError", "InfeasibleProblemError", "MetricError",
    "ToolkitWarning", "UnsupportedPlotError", "UnsupportedReferenceError",
    "FrontPoint", "dominates", "generational_distance",
    "non_dominated_filter", "spacing",
    "FEASIBILITY_TOL", "Bounds", "Constraint", "EvaluatedPoint", "Problem",
    "Sense", "evaluate", "evaluate_batch", "normalize_constraint",
    "penalized_fitness",
    "build_manifest", "csv_header", "render_png_scatter", "render_svg_scatter",
    "write_csv", "write_manifest",
    "__version__",
]
