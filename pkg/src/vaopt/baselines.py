"""Baseline optimizers sharing the VAO run contract: PSO, DE and random search.

Every optimizer spends ``population_size`` evaluations on initialisation
and ``population_size`` per generation, so equal ``(population_size,
max_iter)`` means equal evaluation budgets.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._validation import ConfigurationError, check_interval, check_positive_int
from .base import BaseOptimizer, EliteTracker

__all__ = [
    "PsoParams",
    "DeParams",
    "ParticleSwarmOptimizer",
    "DifferentialEvolution",
    "RandomSearch",
    "PSO",
    "DE",
    "pso_optimize",
    "de_optimize",
    "random_search",
]


@dataclass
class PsoParams:
    population_size: int = 20
    iterations: int = 500
    inertia_weight: float = 1.0
    inertia_damping: float = 0.99
    c1: float = 1.5
    c2: float = 2.0
    velocity_clamp: float = 0.2
    seed: int | None = None


@dataclass
class DeParams:
    population_size: int = 20
    iterations: int = 500
    differential_weight: float = 0.5
    crossover_rate: float = 0.9
    strategy: str = "rand/1/bin"
    seed: int | None = None


class ParticleSwarmOptimizer(BaseOptimizer):
    """Global-best PSO with damped inertia and a per-dimension velocity clamp.

    Parameters
    ----------
    population_size : int, default 20
    max_iter : int, default 500
    inertia_weight : float, default 1.0
    inertia_damping : float, default 0.99
        Inertia is multiplied by this factor after every generation.
    c1, c2 : float, default 1.5 and 2.0
        Personal and global learning coefficients.
    velocity_clamp : float, default 0.2
        Maximum speed as a fraction of each coordinate's range.
    random_state : int, Generator or None
    """

    _name = "pso"

    def __init__(
        self,
        population_size=20,
        max_iter=500,
        inertia_weight=1.0,
        inertia_damping=0.99,
        c1=1.5,
        c2=2.0,
        velocity_clamp=0.2,
        random_state=None,
    ):
        self.population_size = population_size
        self.max_iter = max_iter
        self.inertia_weight = inertia_weight
        self.inertia_damping = inertia_damping
        self.c1 = c1
        self.c2 = c2
        self.velocity_clamp = velocity_clamp
        self.random_state = random_state

    def _validate_params(self):
        check_positive_int(self.population_size, "population_size")
        check_positive_int(self.max_iter, "max_iter", minimum=0)
        check_interval(self.inertia_damping, "inertia_damping", 0.0, 1.0, low_open=True)
        for name in ("inertia_weight", "c1", "c2", "velocity_clamp"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"{name} must be positive")

    def _run(self, objective, space, rng):
        n, d = self.population_size, space.dimension
        vmax = self.velocity_clamp * space.width
        x = space.sample(rng, n)
        v = np.zeros((n, d))
        cost = objective.many(x)
        pbest, pbest_cost = x.copy(), cost.copy()
        elite = EliteTracker(self.max_iter, d)
        elite.offer(x, cost)
        w = self.inertia_weight
        for t in range(self.max_iter):
            r1 = rng.random((n, d))
            r2 = rng.random((n, d))
            gbest = elite.position if math.isfinite(elite.cost) else x[0]
            v = w * v + self.c1 * r1 * (pbest - x) + self.c2 * r2 * (gbest - x)
            v = np.clip(v, -vmax, vmax)
            x = space.clip(x + v)
            cost = objective.many(x)
            improved = cost < pbest_cost
            pbest[improved] = x[improved]
            pbest_cost[improved] = cost[improved]
            elite.offer(x, cost)
            elite.record(t)
            w *= self.inertia_damping
        return elite.result()


class DifferentialEvolution(BaseOptimizer):
    """DE/rand/1/bin with greedy one-to-one selection.

    Parameters
    ----------
    population_size : int, default 20
        At least 4 (the target plus three distinct donors).
    max_iter : int, default 500
    differential_weight : float, default 0.5
        Mutation scale F, in (0, 2].
    crossover_rate : float, default 0.9
        Binomial crossover probability CR; one coordinate is always taken
        from the mutant.
    random_state : int, Generator or None
    """

    _name = "de"

    def __init__(
        self,
        population_size=20,
        max_iter=500,
        differential_weight=0.5,
        crossover_rate=0.9,
        random_state=None,
    ):
        self.population_size = population_size
        self.max_iter = max_iter
        self.differential_weight = differential_weight
        self.crossover_rate = crossover_rate
        self.random_state = random_state

    def _validate_params(self):
        check_positive_int(self.population_size, "population_size", minimum=4)
        check_positive_int(self.max_iter, "max_iter", minimum=0)
        check_interval(self.differential_weight, "differential_weight", 0.0, 2.0, low_open=True)
        check_interval(self.crossover_rate, "crossover_rate", 0.0, 1.0)

    def _donors(self, rng, n):
        # Three distinct indices per target, all different from the target.
        donors = np.empty((n, 3), dtype=int)
        for i in range(n):
            choice = rng.choice(n - 1, size=3, replace=False)
            donors[i] = choice + (choice >= i)
        return donors

    def _run(self, objective, space, rng):
        n, d = self.population_size, space.dimension
        x = space.sample(rng, n)
        cost = objective.many(x)
        elite = EliteTracker(self.max_iter, d)
        elite.offer(x, cost)
        for t in range(self.max_iter):
            r = self._donors(rng, n)
            mutant = space.clip(x[r[:, 0]] + self.differential_weight * (x[r[:, 1]] - x[r[:, 2]]))
            cross = rng.random((n, d)) < self.crossover_rate
            cross[np.arange(n), rng.integers(0, d, size=n)] = True
            trial = np.where(cross, mutant, x)
            trial_cost = objective.many(trial)
            better = trial_cost <= cost
            x[better] = trial[better]
            cost[better] = trial_cost[better]
            elite.offer(x, cost)
            elite.record(t)
        return elite.result()


class RandomSearch(BaseOptimizer):
    """Uniform random sampling with the same per-generation budget as the swarms."""

    _name = "random"

    def __init__(self, population_size=20, max_iter=500, random_state=None):
        self.population_size = population_size
        self.max_iter = max_iter
        self.random_state = random_state

    def _validate_params(self):
        check_positive_int(self.population_size, "population_size")
        check_positive_int(self.max_iter, "max_iter", minimum=0)

    def _run(self, objective, space, rng):
        n = self.population_size
        elite = EliteTracker(self.max_iter, space.dimension)
        x = space.sample(rng, n)
        elite.offer(x, objective.many(x))
        for t in range(self.max_iter):
            x = space.sample(rng, n)
            elite.offer(x, objective.many(x))
            elite.record(t)
        return elite.result()


PSO = ParticleSwarmOptimizer
DE = DifferentialEvolution


def pso_optimize(objective, space, params, rng=None):
    result = PSO(
        population_size=params.population_size,
        max_iter=params.iterations,
        inertia_weight=params.inertia_weight,
        inertia_damping=params.inertia_damping,
        c1=params.c1,
        c2=params.c2,
        velocity_clamp=params.velocity_clamp,
        random_state=params.seed if rng is None else rng,
    ).minimize(objective, space)
    result.seed = params.seed
    return result


def de_optimize(objective, space, params, rng=None):
    if params.strategy != "rand/1/bin":
        raise ConfigurationError(f"unsupported DE strategy {params.strategy!r}; only 'rand/1/bin'")
    result = DE(
        population_size=params.population_size,
        max_iter=params.iterations,
        differential_weight=params.differential_weight,
        crossover_rate=params.crossover_rate,
        random_state=params.seed if rng is None else rng,
    ).minimize(objective, space)
    result.seed = params.seed
    return result


def random_search(objective, space, budget, seed=None):
    """Best cost among ``budget`` uniform samples of ``space``."""
    budget = check_positive_int(budget, "budget")
    rng = np.random.default_rng(seed)
    best = math.inf
    for x in space.sample(rng, budget):
        value = float(objective(x))
        if value < best:
            best = value
    return best
