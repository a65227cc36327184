"""Cuckoo-search engine: config validation, operators, full minimize loop."""

import numpy as np
import pytest

from coaeps import (
    Bounds,
    CoaConfig,
    ConfigurationError,
    Habitat,
    Problem,
    Sense,
    ToolkitWarning,
    cap_population,
    egg_laying_radius,
    initialize_population,
    lay_eggs,
    migrate,
    minimize,
    select_goal,
)


def _hab(pos, fitness, egg_count=2):
    return Habitat(position=np.asarray(pos, dtype=float), egg_count=egg_count,
                   fitness=float(fitness), record=None)


class _OnesRng:
    """Stand-in generator whose uniform draws always return the upper bound."""

    def uniform(self, low, high, size=None):
        return np.broadcast_to(np.asarray(high, dtype=float), size).copy()


class TestCoaConfig:
    def test_defaults_match_published_settings(self):
        c = CoaConfig()
        assert c.initial_population == 5
        assert c.egg_min == 2
        assert c.egg_max == 4
        assert c.clusters == 1

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"egg_min": 5, "egg_max": 4},
            {"egg_min": 0},
            {"initial_population": 0},
            {"clusters": 0},
            {"max_population": 3},
            {"max_iterations": 0},
            {"elr_alpha": 0.0},
            {"elr_alpha": -1.0},
            {"motion_scale": 0.0},
            {"convergence_window": 0},
            {"penalty_coefficient": 0.0},
            {"seed": -1},
            {"seed": 2**64},
        ],
    )
    def test_invalid_configs_rejected(self, kwargs):
        with pytest.raises(ConfigurationError):
            CoaConfig(**kwargs)

    def test_max_seed_accepted(self):
        assert CoaConfig(seed=2**64 - 1).seed == 2**64 - 1


class TestInitializePopulation:
    def _problem(self):
        return Problem(name="sphere", bounds=Bounds([-5.0, -5.0], [5.0, 5.0]),
                       objectives=((Sense.MIN, lambda x: x[0] ** 2 + x[1] ** 2),),
                       constraints=(), vectorized=True)

    def test_population_size_and_box(self):
        pop = initialize_population(self._problem(), CoaConfig(),
                                    np.random.default_rng(0))
        assert len(pop) == 5
        for h in pop:
            assert np.all(h.position >= -5.0) and np.all(h.position <= 5.0)

    def test_egg_counts_in_range(self):
        pop = initialize_population(self._problem(), CoaConfig(),
                                    np.random.default_rng(1))
        assert all(2 <= h.egg_count <= 4 for h in pop)

    def test_deterministic_for_fixed_seed(self):
        a = initialize_population(self._problem(), CoaConfig(),
                                  np.random.default_rng(42))
        b = initialize_population(self._problem(), CoaConfig(),
                                  np.random.default_rng(42))
        for ha, hb in zip(a, b):
            np.testing.assert_array_equal(ha.position, hb.position)
            assert ha.egg_count == hb.egg_count
            assert ha.fitness == hb.fitness

    def test_degenerate_box_warns_single_habitat(self):
        p = Problem(name="flat", bounds=Bounds([1.0, 2.0], [1.0, 2.0]),
                    objectives=((Sense.MIN, lambda x: x[0]),), constraints=())
        with pytest.warns(ToolkitWarning):
            pop = initialize_population(p, CoaConfig(), np.random.default_rng(0))
        assert len(pop) == 1
        np.testing.assert_array_equal(pop[0].position, [1.0, 2.0])

    def test_fitness_consistent_with_record(self):
        pop = initialize_population(self._problem(), CoaConfig(),
                                    np.random.default_rng(5))
        for h in pop:
            assert h.fitness == pytest.approx(
                float(h.position[0] ** 2 + h.position[1] ** 2))


class TestEggLayingRadius:
    def test_share_of_total(self):
        b = Bounds([0.0], [10.0])
        np.testing.assert_allclose(egg_laying_radius(2, 10, b, 1.0), [2.0])

    def test_full_share_is_alpha_width(self):
        b = Bounds([0.0, -1.0], [10.0, 1.0])
        np.testing.assert_allclose(egg_laying_radius(7, 7, b, 1.0), [10.0, 2.0])

    def test_alpha_scales(self):
        b = Bounds([0.0], [8.0])
        np.testing.assert_allclose(egg_laying_radius(4, 16, b, 0.5), [1.0])

    def test_zero_total_rejected(self):
        with pytest.raises(ValueError):
            egg_laying_radius(1, 0, Bounds([0.0], [1.0]), 1.0)

    def test_egg_count_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            egg_laying_radius(0, 5, Bounds([0.0], [1.0]), 1.0)
        with pytest.raises(ValueError):
            egg_laying_radius(6, 5, Bounds([0.0], [1.0]), 1.0)


class TestLayEggs:
    def test_cardinality(self):
        h = _hab([0.0, 0.0], 0.0, egg_count=3)
        eggs = lay_eggs(h, np.array([1.0, 1.0]), Bounds([-5.0, -5.0], [5.0, 5.0]),
                        np.random.default_rng(0))
        assert eggs.shape == (3, 2)

    def test_within_max_norm_radius(self):
        h = _hab([0.0, 0.0], 0.0, egg_count=4)
        radius = np.array([0.5, 2.0])
        eggs = lay_eggs(h, radius, Bounds([-5.0, -5.0], [5.0, 5.0]),
                        np.random.default_rng(1))
        assert np.all(np.abs(eggs - h.position) <= radius)

    def test_corner_habitat_clamped_inside(self):
        b = Bounds([0.0, 0.0], [1.0, 1.0])
        h = _hab([0.0, 0.0], 0.0, egg_count=4)
        eggs = lay_eggs(h, np.array([3.0, 3.0]), b, np.random.default_rng(2))
        assert np.all(eggs >= 0.0) and np.all(eggs <= 1.0)


class TestSelectGoal:
    def test_single_cluster_returns_argmin_position(self):
        pop = [_hab([1.0, 1.0], 5.0), _hab([2.0, 2.0], 1.0), _hab([3.0, 3.0], 9.0)]
        goal = select_goal(pop, 1, np.random.default_rng(0))
        np.testing.assert_array_equal(goal, [2.0, 2.0])

    def test_single_habitat(self):
        goal = select_goal([_hab([4.0], 2.0)], 1, np.random.default_rng(0))
        np.testing.assert_array_equal(goal, [4.0])

    def test_two_separated_groups(self):
        good = [_hab([100.0 + d, 100.0], 1.0 + d) for d in (0.0, 0.1, 0.2)]
        bad = [_hab([0.0 + d, 0.0], 50.0 + d) for d in (0.0, 0.1, 0.2)]
        goal = select_goal(bad + good, 2, np.random.default_rng(0))
        np.testing.assert_array_equal(goal, [100.0, 100.0])

    def test_more_clusters_than_habitats_warns(self):
        pop = [_hab([0.0], 1.0), _hab([1.0], 2.0)]
        with pytest.warns(ToolkitWarning):
            goal = select_goal(pop, 5, np.random.default_rng(0))
        np.testing.assert_array_equal(goal, [0.0])

    def test_empty_population_rejected(self):
        with pytest.raises(ValueError):
            select_goal([], 1, np.random.default_rng(0))


class TestMigrate:
    def test_fixed_point(self):
        b = Bounds([0.0, 0.0], [10.0, 10.0])
        pos = np.array([3.0, 4.0])
        out = migrate(pos, pos, 1.0, b, np.random.default_rng(0))
        np.testing.assert_array_equal(out, pos)

    def test_unit_draw_lands_on_goal(self):
        b = Bounds([0.0, 0.0], [10.0, 10.0])
        out = migrate(np.array([1.0, 2.0]), np.array([3.0, 6.0]), 1.0, b,
                      _OnesRng())
        np.testing.assert_array_equal(out, [3.0, 6.0])

    def test_overshoot_clamped(self):
        b = Bounds([0.0], [5.0])
        out = migrate(np.array([0.0]), np.array([4.0]), 3.0, b, _OnesRng())
        np.testing.assert_array_equal(out, [5.0])

    def test_stays_inside_bounds(self):
        b = Bounds([-1.0, -1.0], [1.0, 1.0])
        rng = np.random.default_rng(9)
        for _ in range(50):
            pos = rng.uniform(-1, 1, size=2)
            goal = rng.uniform(-1, 1, size=2)
            out = migrate(pos, goal, 2.5, b, rng)
            assert np.all(out >= -1.0) and np.all(out <= 1.0)


class TestCapPopulation:
    def test_keeps_lowest_fitness(self):
        pop = [_hab([float(i)], float(30 - i)) for i in range(30)]
        kept = cap_population(pop, 20)
        assert len(kept) == 20
        assert max(h.fitness for h in kept) == 20.0
        assert [h.fitness for h in kept] == sorted(h.fitness for h in kept)

    def test_tie_break_lexicographic(self):
        pop = [_hab([2.0, 0.0], 1.0), _hab([1.0, 5.0], 1.0), _hab([1.0, 3.0], 1.0)]
        kept = cap_population(pop, 2)
        assert [tuple(h.position) for h in kept] == [(1.0, 3.0), (1.0, 5.0)]

    def test_smaller_population_unchanged(self):
        pop = [_hab([0.0], 2.0), _hab([1.0], 1.0)]
        kept = cap_population(pop, 20)
        assert len(kept) == 2
        assert kept[0].fitness == 1.0


def _sphere(n):
    return Problem(name="sphere", bounds=Bounds([-5.0] * n, [5.0] * n),
                   objectives=((Sense.MIN, lambda x: sum(x[i] ** 2 for i in range(n))),),
                   constraints=(), vectorized=True)


def _shifted(n):
    target = np.array([3.0, -1.0, 2.0][:n])

    def f(x):
        return sum((x[i] - target[i]) ** 2 for i in range(n))

    return Problem(name="shifted", bounds=Bounds([-5.0] * n, [5.0] * n),
                   objectives=((Sense.MIN, f),), constraints=(),
                   vectorized=True), target


class TestMinimize:
    def test_sphere_reaches_origin(self):
        p = _sphere(2)
        for seed in (0, 1, 2, 3, 4):
            run = minimize(p, p.bounds, CoaConfig(seed=seed))
            assert run.best.fitness <= 1e-3
            assert np.all(np.abs(run.best.position) <= 0.05)

    def test_shifted_quadratic(self):
        p, target = _shifted(2)
        run = minimize(p, p.bounds, CoaConfig(seed=11))
        assert run.best.fitness <= 1e-3
        np.testing.assert_allclose(run.best.position, target, atol=0.05)

    def test_bare_callable_accepted(self):
        b = Bounds([-5.0, -5.0], [5.0, 5.0])
        run = minimize(lambda x: (x[0] - 1.0) ** 2 + x[1] ** 2, b,
                       CoaConfig(seed=3))
        assert run.best.fitness <= 1e-3
        np.testing.assert_allclose(run.best.position, [1.0, 0.0], atol=0.05)

    def test_history_monotone_nonincreasing(self):
        p = _sphere(3)
        for seed in (5, 6, 7):
            run = minimize(p, p.bounds, CoaConfig(seed=seed))
            hist = np.asarray(run.best_history)
            assert np.all(np.diff(hist) <= 0.0)
            assert run.best.fitness == hist[-1]

    def test_bit_for_bit_determinism(self):
        p = _sphere(2)
        cfg = CoaConfig(seed=123)
        a = minimize(p, p.bounds, cfg)
        b = minimize(p, p.bounds, cfg)
        np.testing.assert_array_equal(a.best.position, b.best.position)
        assert a.best.fitness == b.best.fitness
        np.testing.assert_array_equal(a.best_history, b.best_history)
        assert a.iterations_used == b.iterations_used
        assert a.evaluations_used == b.evaluations_used

    def test_minimum_on_boundary_clamped(self):
        b = Bounds([-5.0], [5.0])
        run = minimize(lambda x: (x[0] - 10.0) ** 2, b, CoaConfig(seed=2))
        assert run.best.position[0] == pytest.approx(5.0, abs=1e-6)
        assert np.all(run.best.position <= 5.0)

    def test_iteration_budget_respected(self):
        p = _sphere(2)
        run = minimize(p, p.bounds, CoaConfig(seed=0, max_iterations=5,
                                              convergence_window=5))
        assert run.iterations_used <= 5
        # history holds the initial value plus one entry per iteration
        assert len(run.best_history) <= 6

    def test_multiobjective_input_rejected(self):
        from conftest import simple_biobjective

        p = simple_biobjective()
        with pytest.raises(ValueError):
            minimize(p, p.bounds, CoaConfig(seed=0))
