"""Input validation helpers shared by the optimizers and problem adapters."""

import numbers

import numpy as np


class ConfigurationError(ValueError):
    """Raised when an optimizer or search space is configured inconsistently."""


class DimensionError(ValueError):
    """Raised when a vector does not have the length a function expects."""


def check_rng(random_state):
    """Turn ``random_state`` into a :class:`numpy.random.Generator`.

    Accepts None, an integer seed, a ``SeedSequence`` or an existing
    ``Generator`` (returned unchanged, so callers can share a stream).
    """
    if isinstance(random_state, np.random.Generator):
        return random_state
    if random_state is None or isinstance(
        random_state, (numbers.Integral, np.random.SeedSequence)
    ):
        return np.random.default_rng(random_state)
    raise ConfigurationError(
        f"random_state must be None, an int or a numpy Generator, got {random_state!r}"
    )


def check_bounds(lower, upper=None, n_dim=None):
    """Validate box bounds and return them as two float arrays.

    ``lower`` may also be a sequence of ``(low, high)`` pairs when ``upper``
    is None. Scalars are broadcast to ``n_dim``.
    """
    if upper is None:
        pairs = np.asarray(lower, dtype=float)
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise ConfigurationError("bounds must be a sequence of (low, high) pairs")
        lower, upper = pairs[:, 0], pairs[:, 1]
    lower = np.atleast_1d(np.asarray(lower, dtype=float))
    upper = np.atleast_1d(np.asarray(upper, dtype=float))
    if n_dim is not None:
        if lower.size == 1:
            lower = np.full(n_dim, lower[0])
        if upper.size == 1:
            upper = np.full(n_dim, upper[0])
    if lower.shape != upper.shape or lower.ndim != 1:
        raise ConfigurationError("lower and upper must have the same length")
    if lower.size == 0:
        raise ConfigurationError("search space needs at least one dimension")
    if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
        raise ConfigurationError("bounds must be finite")
    if np.any(lower >= upper):
        raise ConfigurationError("every lower bound must be strictly below its upper bound")
    return lower, upper


def check_positive_int(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_interval(value, name, low, high, low_open=False):
    if not isinstance(value, numbers.Real) or isinstance(value, bool):
        raise ConfigurationError(f"{name} must be a real number, got {value!r}")
    too_low = value <= low if low_open else value < low
    if too_low or value > high:
        left = "(" if low_open else "["
        raise ConfigurationError(f"{name} must lie in {left}{low}, {high}], got {value}")
    return float(value)


def check_range(pair, name):
    """Validate a nonempty ``(low, high)`` sampling range."""
    try:
        low, high = (float(v) for v in pair)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name} must be a (low, high) pair, got {pair!r}") from None
    if not low <= high:
        raise ConfigurationError(f"{name} is empty: {pair!r}")
    return low, high


def check_vector(x, n_dim=None, name="x"):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {x.shape}")
    if n_dim is not None and x.size != n_dim:
        raise DimensionError(f"{name} must have length {n_dim}, got {x.size}")
    return x
