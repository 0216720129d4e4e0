"""Search spaces, run results and the estimator base class shared by all optimizers."""

import math
import numbers
import time
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from ._validation import ConfigurationError, check_bounds, check_rng


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """Axis-aligned box ``lower <= x <= upper``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower, upper = check_bounds(self.lower, self.upper)
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low, high, dimension):
        return cls(np.full(dimension, float(low)), np.full(dimension, float(high)))

    @classmethod
    def from_bounds(cls, bounds):
        if isinstance(bounds, SearchSpace):
            return bounds
        return cls(*check_bounds(bounds))

    @property
    def dimension(self):
        return self.lower.size

    @property
    def width(self):
        return self.upper - self.lower

    def clip(self, x):
        return np.clip(x, self.lower, self.upper)

    def contains(self, x):
        x = np.asarray(x)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def sample(self, rng, size=None):
        shape = (self.dimension,) if size is None else (size, self.dimension)
        return self.lower + rng.random(shape) * self.width

    def __eq__(self, other):
        return (
            isinstance(other, SearchSpace)
            and np.array_equal(self.lower, other.lower)
            and np.array_equal(self.upper, other.upper)
        )

    def __repr__(self):
        return f"SearchSpace(dimension={self.dimension}, lower={self.lower.tolist()}, upper={self.upper.tolist()})"


@dataclass
class RunResult:
    """Outcome of one seeded optimization run.

    ``best_cost_trace[t]`` is the best-so-far cost after generation ``t``;
    with elitism it never increases and its last entry is ``alpha_cost``.
    """

    best_cost_trace: np.ndarray
    alpha_position: np.ndarray
    alpha_cost: float
    seed: int | None
    evaluations: int
    elapsed: float
    success: bool = True
    message: str = ""
    rejected_moves: int = 0
    algorithm: str = ""

    def to_dict(self):
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "alpha_cost": self.alpha_cost,
            "alpha_position": self.alpha_position.tolist(),
            "evaluations": self.evaluations,
            "rejected_moves": self.rejected_moves,
            "success": self.success,
            "message": self.message,
            "best_cost_trace": self.best_cost_trace.tolist(),
        }


@dataclass
class CountingObjective:
    """Wraps an objective, counts calls and maps NaN to +inf."""

    func: object
    calls: int = field(default=0)

    def __call__(self, x):
        self.calls += 1
        value = float(self.func(x))
        return math.inf if math.isnan(value) else value

    def many(self, X):
        return np.array([self(x) for x in X], dtype=float)


def seed_of(random_state):
    if isinstance(random_state, numbers.Integral) and not isinstance(random_state, bool):
        return int(random_state)
    return None


class BaseOptimizer(BaseEstimator):
    """Common estimator surface for population-based minimizers.

    Subclasses implement ``_run(objective, space, rng)`` and return a
    :class:`RunResult` without timing or seed information; the base class
    fills those in. ``fit`` follows the scikit-learn convention of storing
    fitted state in trailing-underscore attributes and returning ``self``.
    """

    _name = "base"

    def minimize(self, func, bounds):
        """Minimize ``func`` over ``bounds`` and return a :class:`RunResult`."""
        if not callable(func):
            raise ConfigurationError("func is not callable")
        space = SearchSpace.from_bounds(bounds)
        self._validate_params()
        rng = check_rng(self.random_state)
        objective = CountingObjective(func)
        start = time.perf_counter()
        result = self._run(objective, space, rng)
        result.elapsed = time.perf_counter() - start
        result.seed = seed_of(self.random_state)
        result.algorithm = self._name
        result.evaluations = objective.calls
        if not math.isfinite(result.alpha_cost):
            result.success = False
            result.message = result.message or "objective was non-finite at every evaluated point"
        return result

    def fit(self, func, bounds):
        result = self.minimize(func, bounds)
        self.result_ = result
        self.alpha_position_ = result.alpha_position
        self.alpha_cost_ = result.alpha_cost
        self.trace_ = result.best_cost_trace
        self.n_evaluations_ = result.evaluations
        return self

    def check_is_fitted(self):
        if not hasattr(self, "result_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted yet; call fit first")

    def _validate_params(self):
        pass

    def _run(self, objective, space, rng):
        raise NotImplementedError


class EliteTracker:
    """Best-ever position and cost plus the per-generation trace."""

    def __init__(self, iterations, dimension):
        self.position = np.full(dimension, np.nan)
        self.cost = math.inf
        self.trace = np.empty(iterations)

    def offer(self, positions, costs):
        best = int(np.argmin(costs))
        if costs[best] < self.cost:
            self.cost = float(costs[best])
            self.position = np.array(positions[best], dtype=float)
            return True
        return False

    def record(self, t):
        self.trace[t] = self.cost

    def result(self, **kwargs):
        return RunResult(
            best_cost_trace=self.trace,
            alpha_position=self.position,
            alpha_cost=self.cost,
            seed=None,
            evaluations=0,
            elapsed=0.0,
            **kwargs,
        )
