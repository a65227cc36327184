"""Dominance tools and front-quality metrics for mixed-sense objective vectors."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import MetricError
from .problem import Sense


@dataclass(frozen=True)
class FrontPoint:
    """Objective vector with per-component senses and an optional decision vector."""

    values: np.ndarray
    senses: tuple[Sense, ...]
    payload: np.ndarray | None = None

    def __post_init__(self) -> None:
        vals = np.atleast_1d(np.asarray(self.values, dtype=float))
        if vals.ndim != 1 or vals.size != len(self.senses):
            raise ValueError("values and senses must have the same length")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "senses", tuple(self.senses))

    def min_values(self) -> np.ndarray:
        """Values converted to minimize sense (MAX components negated)."""
        signs = np.array([1.0 if s is Sense.MIN else -1.0 for s in self.senses])
        return self.values * signs


def dominates(a: FrontPoint, b: FrontPoint) -> bool:
    """True iff a is no worse than b everywhere and strictly better somewhere."""
    if a.senses != b.senses:
        raise ValueError("points have mismatched senses")
    av, bv = a.min_values(), b.min_values()
    return bool(np.all(av <= bv) and np.any(av < bv))


def non_dominated_filter(points: Sequence[FrontPoint]) -> list[FrontPoint]:
    """Keep the non-dominated subset, collapsing duplicate objective vectors.

    Duplicates keep the first occurrence by input order; the result is sorted
    ascending by the first objective value (stable).
    """
    points = list(points)
    if not points:
        return []
    senses = points[0].senses
    for p in points:
        if p.senses != senses:
            raise ValueError("points have mismatched senses")

    # collapse exact duplicates, keeping the earliest representative
    seen: dict[tuple[float, ...], int] = {}
    keep_idx: list[int] = []
    for i, p in enumerate(points):
        key = tuple(p.values.tolist())
        if key not in seen:
            seen[key] = i
            keep_idx.append(i)
    A = np.array([points[i].min_values() for i in keep_idx])

    # incremental culling: survivors must be strictly better than the current
    # pivot in some component, which drops every weakly dominated distinct row
    alive = np.ones(len(keep_idx), dtype=bool)
    order = np.arange(len(keep_idx))
    i = 0
    while i < len(A):
        if not alive[i]:
            i += 1
            continue
        mask = np.any(A[alive] < A[i], axis=1)
        mask[order[alive] == i] = True
        alive[alive] = mask
        i += 1

    survivors = [points[keep_idx[j]] for j in np.flatnonzero(alive)]
    return sorted(survivors, key=lambda p: p.values[0])


def spacing(front: Sequence[FrontPoint]) -> float:
    """Distribution uniformity: stdev of nearest-neighbor Manhattan distances.

    Args:
        front: at least two points with matching senses.

    Returns:
        Sample standard deviation of each point's distance to its nearest
        neighbor in objective space; 0.0 means perfectly even spacing.
    """
    if len(front) < 2:
        raise MetricError("spacing needs at least two front points")
    A = np.array([p.values for p in front])
    D = np.abs(A[:, None, :] - A[None, :, :]).sum(axis=2)
    np.fill_diagonal(D, np.inf)
    d = D.min(axis=1)
    return float(np.std(d, ddof=1))


def generational_distance(front: Sequence[FrontPoint],
                          reference: Sequence[FrontPoint]) -> float:
    """Mean Euclidean distance from each front point to its nearest reference point.

    Args:
        front: candidate front (nonempty).
        reference: reference front (nonempty, same objective count).

    Returns:
        Average nearest-reference distance; 0.0 iff the front is a subset of
        the reference set.
    """
    if not len(front) or not len(reference):
        raise MetricError("generational distance needs nonempty front and reference")
    A = np.array([p.values for p in front])
    R = np.array([p.values for p in reference])
    if A.shape[1] != R.shape[1]:
        raise MetricError("front and reference have different objective counts")
    D = np.sqrt(((A[:, None, :] - R[None, :, :]) ** 2).sum(axis=2))
    return float(D.min(axis=1).mean())
