import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sklearn.base import clone

from vaopt import VAO, ConfigurationError, SearchSpace, VaoParams, vao_optimize
from vaopt.functions import lookup
from vaopt.vao import (
    Plant,
    Population,
    _vao_run,
    competition_steps,
    hybrid_mutation,
    init_population,
    intra_competition_step,
    update_expansion,
)


class _OnesRng:
    """Stands in for a Generator whose uniform draws are all 1."""

    def random(self, shape):
        return np.ones(shape)


def _pair(expansions, lambdas, drawback=0.1):
    plants = [
        Plant(np.array([float(i)]), e, lam, drawback, drawback, float(i))
        for i, (e, lam) in enumerate(zip(expansions, lambdas))
    ]
    return Population.from_plants(plants)


def test_step_toward_a_stronger_plant_matches_hand_value():
    pop = _pair([10.0, 100.0], [20.0, 20.0])
    steps = competition_steps(pop, VaoParams(), _OnesRng())
    # weak plant 0 toward strong plant 1: (100/100) * 0.9 * 0.9 * 1
    assert steps[0, 1] == pytest.approx(0.81)
    assert steps[1, 0] == 0.0


def test_step_scales_with_target_expansion():
    pop = _pair([100.0, 10.0], [20.0, 20.0])
    pop.expansion = np.array([10.0, 100.0])
    pop.expansion[1] = 10.0
    pop.intra_competition = np.array([20.0, 25.0])
    steps = competition_steps(pop, VaoParams(), _OnesRng())
    # only the higher intra-competition attracts; step uses the target's expansion 10
    assert steps[0, 1] == pytest.approx(0.1 * 0.81)
    assert steps[1, 0] == 0.0


def test_update_expansion_maps_costs_onto_range():
    pop = _pair([50.0] * 3, [20.0] * 3)
    pop.costs = np.array([1.0, 3.0, 2.0])
    update_expansion(pop)
    assert pop.expansion.tolist() == [100.0, 10.0, 55.0]


def test_update_expansion_with_equal_or_infinite_costs():
    pop = _pair([50.0] * 3, [20.0] * 3)
    pop.costs = np.array([4.0, 4.0, math.inf])
    update_expansion(pop)
    assert pop.expansion.tolist() == [55.0, 55.0, 10.0]


def test_hybrid_mutation_extremes():
    space = SearchSpace.uniform(0, 1, 5)
    rng = np.random.default_rng(0)
    x = np.full(5, 0.5)
    assert np.array_equal(hybrid_mutation(x, space, 0.0, 0.1, rng), x)
    moved = hybrid_mutation(x, space, 1.0, 0.1, rng)
    assert np.all(moved != x)
    assert space.contains(hybrid_mutation(x, space, 1.0, 50.0, rng))


def test_mutation_probability_decays():
    params = VaoParams()
    assert params.mutation_probability(0) == 0.2
    assert params.mutation_probability(2) == pytest.approx(0.2 * 0.99**2)


def test_single_plant_only_mutates():
    space = SearchSpace.uniform(-1, 1, 3)
    params = VaoParams(population_size=1, mutation_rate=0.0)
    rng = np.random.default_rng(1)
    pop = init_population(space, params, rng, lambda x: float(x @ x))
    before = pop.positions.copy()
    intra_competition_step(pop, lambda x: float(x @ x), space, params, 0, rng)
    assert np.array_equal(pop.positions, before)


def test_init_population_respects_ranges():
    space = SearchSpace.uniform(-3, 3, 4)
    pop = init_population(space, VaoParams(population_size=50), np.random.default_rng(0))
    assert np.all(np.isinf(pop.costs))
    assert np.all((pop.expansion >= 10) & (pop.expansion <= 100))
    assert np.all((pop.omega >= 0.1) & (pop.omega <= 0.3))


def test_non_finite_moves_are_rejected():
    space = SearchSpace.uniform(-1, 1, 2)

    def spiky(x):
        return math.nan if x[0] > 0 else float(x @ x)

    res = VAO(population_size=10, max_iter=30, random_state=0).minimize(spiky, space)
    assert res.success
    assert res.alpha_position[0] <= 0
    assert res.rejected_moves > 0


def test_objective_that_is_never_finite_reports_failure():
    res = VAO(population_size=5, max_iter=3, random_state=0).minimize(lambda x: math.inf, [(-1, 1)])
    assert not res.success
    assert "non-finite" in res.message


def test_zero_iterations_give_empty_trace():
    res = VAO(population_size=4, max_iter=0, random_state=0).minimize(lambda x: float(x @ x), [(-1, 1)] * 2)
    assert res.best_cost_trace.size == 0
    assert res.evaluations == 4


def test_evaluation_budget():
    res = VAO(population_size=7, max_iter=11, random_state=0).minimize(lookup("dejong"), [(-5, 5)] * 3)
    assert res.evaluations == 7 * 12


def test_functional_and_estimator_paths_agree():
    f = lookup("beale")
    space = f.space()
    a = vao_optimize(f, space, VaoParams(population_size=10, iterations=40, seed=5))
    b = VAO(population_size=10, max_iter=40, random_state=5).minimize(f, space)
    assert np.array_equal(a.best_cost_trace, b.best_cost_trace)
    assert a.seed == b.seed == 5


def test_estimator_protocol():
    est = VAO(population_size=8, max_iter=20, random_state=2)
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(Exception):
        est.check_is_fitted()
    est.fit(lookup("booth"), lookup("booth").space())
    assert est.alpha_cost_ == est.trace_[-1]
    assert est.n_evaluations_ == 8 * 21


@pytest.mark.parametrize(
    "kwargs",
    [
        {"population_size": 0},
        {"mutation_rate": 1.5},
        {"mutation_damping": 0.0},
        {"mutation_sigma_frac": -1.0},
        {"expansion_range": (50, 10)},
        {"drawback_range": (0.1, 1.0)},
    ],
)
def test_invalid_parameters(kwargs):
    with pytest.raises(ConfigurationError):
        VAO(**kwargs).minimize(lambda x: 0.0, [(-1, 1)])


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 12), d=st.integers(1, 5))
def test_attribute_ranges_and_monotone_trace(seed, n, d):
    params = VaoParams(population_size=n, iterations=25)
    space = SearchSpace.uniform(-2, 2, d)
    checks = []

    def watch(t, pop):
        checks.append(
            np.all((pop.expansion >= 10) & (pop.expansion <= 100))
            and np.all((pop.intra_competition >= 10) & (pop.intra_competition <= 30))
            and np.all((pop.omega >= 0.1) & (pop.omega <= 0.3))
            and np.all((pop.psi >= 0.1) & (pop.psi <= 0.3))
            and np.all((pop.positions >= space.lower) & (pop.positions <= space.upper))
            and np.all(np.diff(pop.costs) >= 0)
        )

    res = _vao_run(lookup("rastrigin"), space, params, np.random.default_rng(seed), callback=watch)
    assert all(checks) and len(checks) == 25
    assert np.all(np.diff(res.best_cost_trace) <= 0)
    assert res.alpha_cost == res.best_cost_trace[-1]
