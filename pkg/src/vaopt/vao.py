"""Victoria Amazonica Optimization.

Each plant carries a position plus four life-cycle attributes: expansion
(strength derived from cost), intra-competition (a stochastic score
re-drawn every generation), and two drawback factors that damp how far the
plant can move. A plant moves toward every plant that beats it on
expansion or on intra-competition; every move also carries a damped Gaussian
"hybrid" mutation. The best plant ever seen (alpha) is kept in the
population.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import (
    ConfigurationError,
    check_interval,
    check_positive_int,
    check_range,
    check_rng,
)
from .base import BaseOptimizer, CountingObjective, EliteTracker, SearchSpace, seed_of

__all__ = [
    "Plant",
    "Population",
    "VaoParams",
    "VictoriaAmazonicaOptimizer",
    "VAO",
    "init_population",
    "update_expansion",
    "competition_steps",
    "intra_competition_step",
    "hybrid_mutation",
    "vao_optimize",
]


@dataclass
class Plant:
    position: np.ndarray
    expansion: float
    intra_competition: float
    drawback_omega: float
    drawback_psi: float
    cost: float


@dataclass
class VaoParams:
    population_size: int = 20
    iterations: int = 500
    mutation_rate: float = 0.2
    mutation_damping: float = 0.99
    mutation_sigma_frac: float = 0.1
    attraction_base: float = 1.0
    expansion_range: tuple = (10.0, 100.0)
    lambda_range: tuple = (10.0, 30.0)
    drawback_range: tuple = (0.1, 0.3)
    seed: int | None = None

    def validate(self):
        check_positive_int(self.population_size, "population_size")
        check_positive_int(self.iterations, "iterations", minimum=0)
        check_interval(self.mutation_rate, "mutation_rate", 0.0, 1.0)
        check_interval(self.mutation_damping, "mutation_damping", 0.0, 1.0, low_open=True)
        if not self.mutation_sigma_frac >= 0:
            raise ConfigurationError("mutation_sigma_frac must be non-negative")
        if not self.attraction_base > 0:
            raise ConfigurationError("attraction_base must be positive")
        low, high = check_range(self.expansion_range, "expansion_range")
        if low <= 0:
            raise ConfigurationError("expansion_range must be positive")
        check_range(self.lambda_range, "lambda_range")
        low, high = check_range(self.drawback_range, "drawback_range")
        if low < 0 or high >= 1:
            raise ConfigurationError("drawback_range must lie inside [0, 1)")
        return self

    def mutation_probability(self, iteration):
        return self.mutation_rate * self.mutation_damping**iteration


@dataclass
class Population:
    """Structure-of-arrays view of a list of plants.

    ``ids`` remember each plant's original index so sorting is stable and
    ties are broken by birth order.
    """

    positions: np.ndarray
    expansion: np.ndarray
    intra_competition: np.ndarray
    omega: np.ndarray
    psi: np.ndarray
    costs: np.ndarray
    ids: np.ndarray
    rejected: int = field(default=0)

    def __len__(self):
        return len(self.costs)

    def __getitem__(self, i):
        return Plant(
            position=self.positions[i].copy(),
            expansion=float(self.expansion[i]),
            intra_competition=float(self.intra_competition[i]),
            drawback_omega=float(self.omega[i]),
            drawback_psi=float(self.psi[i]),
            cost=float(self.costs[i]),
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @classmethod
    def from_plants(cls, plants):
        plants = list(plants)
        return cls(
            positions=np.array([p.position for p in plants], dtype=float),
            expansion=np.array([p.expansion for p in plants], dtype=float),
            intra_competition=np.array([p.intra_competition for p in plants], dtype=float),
            omega=np.array([p.drawback_omega for p in plants], dtype=float),
            psi=np.array([p.drawback_psi for p in plants], dtype=float),
            costs=np.array([p.cost for p in plants], dtype=float),
            ids=np.arange(len(plants)),
        )

    def reorder(self, order):
        for name in ("positions", "expansion", "intra_competition", "omega", "psi", "costs", "ids"):
            setattr(self, name, getattr(self, name)[order])

    def sort(self):
        self.reorder(np.lexsort((self.ids, self.costs)))


def _evaluate(objective, x):
    value = float(objective(x))
    return math.inf if math.isnan(value) else value


def init_population(space, params, rng, objective=None):
    """Sample ``params.population_size`` plants uniformly inside ``space``.

    Attributes are drawn uniformly from their ranges. Costs are evaluated
    when ``objective`` is given and left at +inf otherwise.
    """
    n = check_positive_int(params.population_size, "population_size")
    if not isinstance(space, SearchSpace):
        space = SearchSpace.from_bounds(space)
    positions = space.sample(rng, n)
    expansion = rng.uniform(*params.expansion_range, size=n)
    intra = rng.uniform(*params.lambda_range, size=n)
    omega = rng.uniform(*params.drawback_range, size=n)
    psi = rng.uniform(*params.drawback_range, size=n)
    positions = space.clip(positions)
    if objective is None:
        costs = np.full(n, math.inf)
    else:
        costs = np.array([_evaluate(objective, x) for x in positions])
    return Population(positions, expansion, intra, omega, psi, costs, np.arange(n))


def update_expansion(population, expansion_range=(10.0, 100.0)):
    """Map costs linearly onto the expansion range: best gets the top, worst the bottom.

    Plants with a non-finite cost get the minimum. If all finite costs are
    equal every finite plant gets the midpoint.
    """
    low, high = expansion_range
    costs = population.costs
    finite = np.isfinite(costs)
    expansion = np.full(len(costs), float(low))
    if finite.any():
        best = costs[finite].min()
        worst = costs[finite].max()
        if worst > best:
            scaled = low + (high - low) * (worst - costs[finite]) / (worst - best)
            # Rounding can overshoot the ends by an ulp.
            expansion[finite] = np.clip(scaled, low, high)
        else:
            expansion[finite] = 0.5 * (low + high)
    population.expansion = expansion
    return population


def hybrid_mutation(position, space, rate, sigma_frac, rng):
    """Add Gaussian noise to each coordinate with probability ``rate``.

    The noise scale is ``sigma_frac`` times the width of that coordinate's
    range. Works on a single position or on a ``(n, D)`` stack. Random
    numbers are always drawn so the stream does not depend on ``rate``.
    """
    position = np.asarray(position, dtype=float)
    mask = rng.random(position.shape) < rate
    noise = rng.normal(0.0, 1.0, position.shape) * (sigma_frac * space.width)
    return space.clip(np.where(mask, position + noise, position))


def competition_steps(population, params, rng):
    """Per-pair step fractions ``steps[i, j]`` of the move of plant i toward plant j."""
    n = len(population)
    u = rng.random((n, n))
    stronger = population.expansion[None, :] > population.expansion[:, None]
    fiercer = population.intra_competition[None, :] > population.intra_competition[:, None]
    attracted = stronger | fiercer
    np.fill_diagonal(attracted, False)
    damping = (1.0 - population.omega) * (1.0 - population.psi)
    steps = (
        params.attraction_base
        * (population.expansion[None, :] / params.expansion_range[1])
        * damping[:, None]
        * u
    )
    return np.where(attracted, steps, 0.0)


def intra_competition_step(population, objective, space, params, iteration_index, rng):
    """One generation of pairwise movement, mutation and re-evaluation.

    Targets are the positions at the start of the generation. Every plant
    visits its attractors from the weakest to the strongest (the population
    is kept sorted by cost, so in reverse index order); each visit moves it
    the fraction ``steps[i, j]`` of the remaining gap and adds a hybrid
    mutation term. A plant that nothing attracts mutates once in place.
    Moves whose cost is not finite are rejected and counted in
    ``population.rejected``.
    """
    n = len(population)
    steps = competition_steps(population, params, rng)
    attracted = steps > 0
    rate = params.mutation_probability(iteration_index)
    sigma = params.mutation_sigma_frac
    # Mutation draws for every (target j, mover i) pair, indexed [j, i, d].
    shape = (n, n, space.dimension)
    hit = (rng.random(shape) < rate) & attracted.T[:, :, None]
    jumps = np.zeros(shape)
    where = np.nonzero(hit)
    jumps[where] = rng.standard_normal(len(where[0])) * (sigma * space.width[where[2]])
    targets = population.positions
    moved = targets.copy()
    for j in reversed(range(n)):
        moved += steps[:, j, None] * (targets[j] - moved) + jumps[j]
        np.clip(moved, space.lower, space.upper, out=moved)
    alone = ~attracted.any(axis=1)
    if alone.any():
        moved[alone] = hybrid_mutation(moved[alone], space, rate, sigma, rng)

    for i in range(n):
        cost = _evaluate(objective, moved[i])
        if math.isfinite(cost):
            population.positions[i] = moved[i]
            population.costs[i] = cost
        else:
            population.rejected += 1
    population.intra_competition = rng.uniform(*params.lambda_range, size=n)
    return population


def vao_optimize(objective, space, params, rng=None):
    """Run VAO and return a :class:`RunResult`.

    ``params.seed`` seeds the stream when ``rng`` is None. Evaluations are
    counted by wrapping ``objective``.
    """
    import time

    params.validate()
    if not isinstance(space, SearchSpace):
        space = SearchSpace.from_bounds(space)
    if rng is None:
        rng = check_rng(params.seed)
    counter = CountingObjective(objective)
    start = time.perf_counter()
    result = _vao_run(counter, space, params, rng)
    result.elapsed = time.perf_counter() - start
    result.evaluations = counter.calls
    result.seed = params.seed
    result.algorithm = "vao"
    if not math.isfinite(result.alpha_cost):
        result.success = False
        result.message = "objective was non-finite at every evaluated point"
    return result


def _vao_run(objective, space, params, rng, callback=None):
    population = init_population(space, params, rng, objective)
    update_expansion(population, params.expansion_range)
    population.sort()
    elite = EliteTracker(params.iterations, space.dimension)
    elite.offer(population.positions, population.costs)

    for t in range(params.iterations):
        intra_competition_step(population, objective, space, params, t, rng)
        if not elite.offer(population.positions, population.costs) and math.isfinite(elite.cost):
            if population.costs.min() > elite.cost:
                worst = int(np.argmax(population.costs))
                population.positions[worst] = elite.position
                population.costs[worst] = elite.cost
        update_expansion(population, params.expansion_range)
        population.sort()
        elite.record(t)
        if callback is not None:
            callback(t, population)

    return elite.result(rejected_moves=population.rejected)


class VictoriaAmazonicaOptimizer(BaseOptimizer):
    """Victoria Amazonica Optimization (VAO) minimizer.

    Parameters
    ----------
    population_size : int, default 20
        Number of plants.
    max_iter : int, default 500
        Number of generations.
    mutation_rate : float, default 0.2
        Initial per-coordinate probability of hybrid mutation.
    mutation_damping : float, default 0.99
        Multiplicative decay of the mutation rate per generation.
    mutation_sigma_frac : float, default 0.1
        Mutation standard deviation as a fraction of each coordinate's range.
    attraction_base : float, default 1.0
        Scale of the pairwise attraction step.
    expansion_range, lambda_range, drawback_range : tuple
        Sampling ranges of the plant attributes.
    random_state : int, Generator or None
        Seed of the run.

    Attributes
    ----------
    alpha_position_, alpha_cost_ : best position and cost found by ``fit``.
    trace_ : best-so-far cost after each generation.
    """

    _name = "vao"

    def __init__(
        self,
        population_size=20,
        max_iter=500,
        mutation_rate=0.2,
        mutation_damping=0.99,
        mutation_sigma_frac=0.1,
        attraction_base=1.0,
        expansion_range=(10.0, 100.0),
        lambda_range=(10.0, 30.0),
        drawback_range=(0.1, 0.3),
        random_state=None,
    ):
        self.population_size = population_size
        self.max_iter = max_iter
        self.mutation_rate = mutation_rate
        self.mutation_damping = mutation_damping
        self.mutation_sigma_frac = mutation_sigma_frac
        self.attraction_base = attraction_base
        self.expansion_range = expansion_range
        self.lambda_range = lambda_range
        self.drawback_range = drawback_range
        self.random_state = random_state

    def to_params(self):
        return VaoParams(
            population_size=self.population_size,
            iterations=self.max_iter,
            mutation_rate=self.mutation_rate,
            mutation_damping=self.mutation_damping,
            mutation_sigma_frac=self.mutation_sigma_frac,
            attraction_base=self.attraction_base,
            expansion_range=tuple(self.expansion_range),
            lambda_range=tuple(self.lambda_range),
            drawback_range=tuple(self.drawback_range),
            seed=seed_of(self.random_state),
        )

    def _validate_params(self):
        self.to_params().validate()

    def _run(self, objective, space, rng):
        return _vao_run(objective, space, self.to_params(), rng)


VAO = VictoriaAmazonicaOptimizer
