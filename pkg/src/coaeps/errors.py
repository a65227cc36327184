"""Shared exception and warning types."""


class ConfigurationError(ValueError):
    """Invalid solver, grid, or sweep configuration."""


class InfeasibleProblemError(RuntimeError):
    """No feasible point was found while probing a problem."""


class MetricError(ValueError):
    """A front-quality metric is undefined for the given input."""


class UnsupportedPlotError(ValueError):
    """The scatter renderer only handles two-objective fronts."""


class UnsupportedReferenceError(LookupError):
    """No reference front is available for the requested problem/variant."""


class ToolkitWarning(UserWarning):
    """Non-fatal condition worth surfacing (degenerate box, empty front, ...)."""
