"""Shared helpers for the test suite."""

import numpy as np
import pytest

from coaeps import Bounds, FrontPoint, Problem, Sense

MIN2 = (Sense.MIN, Sense.MIN)
MIN3 = (Sense.MIN, Sense.MIN, Sense.MIN)


def mm(*values):
    """FrontPoint with all-minimize senses."""
    return FrontPoint(np.asarray(values, dtype=float), (Sense.MIN,) * len(values))


def front_of(rows):
    return [mm(*row) for row in rows]


@pytest.fixture
def unit_box2():
    return Bounds([0.0, 0.0], [1.0, 1.0])


@pytest.fixture
def sym_box2():
    return Bounds([-5.0, -5.0], [5.0, 5.0])


def simple_biobjective():
    """min (x1, x2) on [0,5]^2 with the disk constraint (x1-2)^2+(x2-2)^2 <= 4."""
    from coaeps import normalize_constraint

    circle = lambda x: (x[0] - 2.0) ** 2 + (x[1] - 2.0) ** 2
    return Problem(
        name="disk-test",
        bounds=Bounds([0.0, 0.0], [5.0, 5.0]),
        objectives=((Sense.MIN, lambda x: x[0]), (Sense.MIN, lambda x: x[1])),
        constraints=(normalize_constraint("le", circle, 4.0),),
        vectorized=True,
    )
