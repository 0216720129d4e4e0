"""Benchmark objective functions with registered bounds and known optima.

All functions take a 1-D array and return a float. Bounds are not
enforced here; the optimizers clip to their search space.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import DimensionError, check_vector
from .base import SearchSpace

__all__ = [
    "TestFunction",
    "Optimum",
    "registry",
    "lookup",
    "evaluate",
    "known_optimum",
    "FUNCTIONS",
]


def ackley(x):
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.mean(x**2)))
        - np.exp(np.mean(np.cos(2.0 * np.pi * x)))
        + 20.0
        + math.e
    )


def powell(x):
    # Groups of four; trailing coordinates beyond a multiple of 4 are free.
    m = x.size // 4
    a, b, c, d = (x[k : 4 * m : 4] for k in range(4))
    return float(np.sum((a + 10 * b) ** 2 + 5 * (c - d) ** 2 + (b - 2 * c) ** 4 + 10 * (a - d) ** 4))


def rastrigin(x):
    return float(10.0 * x.size + np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x)))


_PYRAMID_CONST = (
    (1.0 / math.tan(math.sqrt(math.exp(math.pi))))
    * math.pi
    * (math.sqrt(0.1) / math.pi * (math.sqrt(math.sqrt(math.pi + 12)) / 20))
)


def pyramid(x):
    # The middle operator is read as a sum; no verified optimum is
    # registered for this form.
    return float(
        np.sum(np.sin(2.0 * x)) * 12.0
        + _PYRAMID_CONST
        - 20.0 * math.exp(-1.0 / 73.0 * math.exp(math.sqrt(42.0 / x.size)))
    )


def booth(x):
    x1, x2 = x
    return float((x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2)


def zakharov(x):
    s = 0.5 * np.sum(np.arange(1, x.size + 1) * x)
    return float(np.sum(x**2) + s**2 + s**4)


def dejong(x):
    return float(np.sum(x**2))


def michalewicz(x, m=10):
    i = np.arange(1, x.size + 1)
    return float(-np.sum(np.sin(x) * np.sin(i * x**2 / np.pi) ** (2 * m)))


def beale(x):
    x1, x2 = x
    return float(
        (1.5 - x1 + x1 * x2) ** 2
        + (2.25 - x1 + x1 * x2**2) ** 2
        + (2.625 - x1 + x1 * x2**3) ** 2
    )


def matyas(x):
    x1, x2 = x
    return float(0.26 * (x1**2 + x2**2) - 0.48 * x1 * x2)


def trid(x):
    return float(np.sum((x - 1) ** 2) - np.sum(x[1:] * x[:-1]))


def schwefel_sumprod(x):
    return float(-np.sum(x) + np.prod(x))


def easom(x):
    x1, x2 = x
    return float(-math.cos(x1) * math.cos(x2) * math.exp(-((x1 - math.pi) ** 2) - (x2 - math.pi) ** 2))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1) ** 2))


def bohachevsky(x):
    x1, x2 = x
    return float(
        x1**2 + 2 * x2**2 - 0.3 * math.cos(3 * math.pi * x1) - 0.4 * math.cos(4 * math.pi * x2) + 0.7
    )


def bukin6(x):
    x1, x2 = x
    return float(100.0 * math.sqrt(abs(x2 - 0.01 * x1**2)) + 0.01 * abs(x1 + 10))


def branin(x):
    x1, x2 = x
    b = 5.1 / (4 * math.pi**2)
    c = 5 / math.pi
    t = 1 / (8 * math.pi)
    return float((x2 - b * x1**2 + c * x1 - 6) ** 2 + 10 * (1 - t) * math.cos(x1) + 10)


def eggholder(x):
    x1, x2 = x
    return float(
        -(x2 + 47) * math.sin(math.sqrt(abs(x2 + x1 / 2 + 47)))
        - x1 * math.sin(math.sqrt(abs(x1 - (x2 + 47))))
    )


def crossintray(x):
    x1, x2 = x
    inner = abs(math.sin(x1) * math.sin(x2) * math.exp(abs(100 - math.hypot(x1, x2) / math.pi)))
    return float(-0.0001 * (inner + 1) ** 0.1)


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x**2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def goldstein(x):
    x1, x2 = x
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2)
    return float(a * b)


def dixon(x):
    i = np.arange(2, x.size + 1)
    return float((x[0] - 1) ** 2 + np.sum(i * (2 * x[1:] ** 2 - x[:-1]) ** 2))


def levy(x):
    w = 1 + (x - 1) / 4
    head = math.sin(math.pi * w[0]) ** 2
    body = np.sum((w[:-1] - 1) ** 2 * (1 + 10 * np.sin(np.pi * w[:-1] + 1) ** 2))
    tail = (w[-1] - 1) ** 2 * (1 + math.sin(2 * math.pi * w[-1]) ** 2)
    return float(head + body + tail)


def bird(x):
    x1, x2 = x
    return float(
        math.sin(x1) * math.exp((1 - math.cos(x2)) ** 2)
        + math.cos(x2) * math.exp((1 - math.sin(x1)) ** 2)
        + (x1 - x2) ** 2
    )


@dataclass(frozen=True)
class Optimum:
    x: tuple
    f: float
    exact: bool = True

    @property
    def tolerance(self):
        return 1e-6 if self.exact else 1e-4


def _zeros(d):
    return [Optimum((0.0,) * d, 0.0)]


def _ones(d):
    return [Optimum((1.0,) * d, 0.0)]


def _trid_optimum(d):
    x = tuple(float(i * (d + 1 - i)) for i in range(1, d + 1))
    return [Optimum(x, -d * (d + 4) * (d - 1) / 6.0)]


def _dixon_optimum(d):
    x = tuple(2.0 ** (-(2.0**i - 2) / 2.0**i) for i in range(1, d + 1))
    return [Optimum(x, 0.0)]


def _powell_optimum(d):
    return [Optimum((0.0,) * d, 0.0)] if d >= 4 else []


def _michalewicz_optimum(d):
    return [Optimum((2.20290552, 1.57079633), -1.8013034, exact=False)] if d == 2 else []


@dataclass(frozen=True)
class TestFunction:
    """Descriptor of one benchmark function.

    ``arity`` is 2 for fixed two-dimensional functions and None for
    functions defined in any dimension (at least ``min_dim``).
    ``optima`` maps a dimension to the list of known global minima.
    """

    name: str
    func: object = field(repr=False)
    lower: tuple
    upper: tuple
    arity: int | None = None
    min_dim: int = 1
    optima: object = field(default=None, repr=False)
    symmetric: bool = False
    oracle: bool = True

    __test__ = False

    def check_dim(self, d):
        if self.arity is not None and d != self.arity:
            raise DimensionError(f"{self.name} is defined for D={self.arity} only, got D={d}")
        if d < self.min_dim:
            raise DimensionError(f"{self.name} needs D >= {self.min_dim}, got D={d}")
        return d

    def __call__(self, x):
        x = check_vector(x)
        self.check_dim(x.size)
        return self.func(x)

    @property
    def default_bounds(self):
        return list(zip(self.lower, self.upper))

    def space(self, dimension=None, bounds=None):
        """Search space in ``dimension`` (default: the function's arity or 2)."""
        d = self.check_dim(dimension or self.arity or 2)
        if bounds is not None:
            lo, hi = bounds
            return SearchSpace.uniform(lo, hi, d)
        if len(self.lower) == 1:
            return SearchSpace.uniform(self.lower[0], self.upper[0], d)
        return SearchSpace(np.array(self.lower), np.array(self.upper))

    def known_optima(self, dimension=None):
        d = dimension or self.arity or 2
        self.check_dim(d)
        if self.optima is None:
            return []
        return list(self.optima(d)) if callable(self.optima) else list(self.optima)


def _any(name, func, low, high, optima=None, min_dim=1, symmetric=False, oracle=True):
    return TestFunction(name, func, (low,), (high,), None, min_dim, optima, symmetric, oracle)


def _two(name, func, lower, upper, optima, symmetric=False):
    if np.isscalar(lower):
        lower, upper = (lower, lower), (upper, upper)
    return TestFunction(name, func, tuple(lower), tuple(upper), 2, 2, optima, symmetric)


_PI = math.pi

FUNCTIONS = {
    f.name: f
    for f in [
        _any("ackley", ackley, -35.0, 35.0, _zeros, symmetric=True),
        _any("powell", powell, -4.0, 5.0, _powell_optimum, min_dim=4),
        _any("rastrigin", rastrigin, -5.0, 5.0, _zeros, symmetric=True),
        _any("pyramid", pyramid, -40.0, 40.0, None, oracle=False),
        _two("booth", booth, -10.0, 10.0, [Optimum((1.0, 3.0), 0.0)]),
        _any("zakharov", zakharov, -5.0, 5.0, _zeros),
        _any("dejong", dejong, -10.0, 10.0, _zeros, symmetric=True),
        _any("michalewicz", michalewicz, 0.0, _PI, _michalewicz_optimum),
        _two("beale", beale, -4.5, 4.5, [Optimum((3.0, 0.5), 0.0)]),
        _two("matyas", matyas, -10.0, 10.0, [Optimum((0.0, 0.0), 0.0)], symmetric=True),
        _any("trid", trid, -36.0, 36.0, _trid_optimum),
        _any("schwefel_sumprod", schwefel_sumprod, -10.0, 10.0, None, oracle=False),
        _two("easom", easom, -100.0, 100.0, [Optimum((_PI, _PI), -1.0)]),
        _any("rosenbrock", rosenbrock, -30.0, 30.0, _ones, min_dim=2),
        _two("bohachevsky", bohachevsky, -100.0, 100.0, [Optimum((0.0, 0.0), 0.0)], symmetric=True),
        _two("bukin6", bukin6, (-15.0, -3.0), (-5.0, 3.0), [Optimum((-10.0, 1.0), 0.0)]),
        _two(
            "branin",
            branin,
            (-5.0, 0.0),
            (10.0, 15.0),
            [
                Optimum((-_PI, 12.275), 5 / (4 * _PI), exact=False),
                Optimum((_PI, 2.275), 5 / (4 * _PI), exact=False),
                Optimum((3 * _PI, 2.475), 5 / (4 * _PI), exact=False),
            ],
        ),
        _two("eggholder", eggholder, -512.0, 512.0, [Optimum((512.0, 404.2319), -959.6407, exact=False)]),
        _two(
            "crossintray",
            crossintray,
            -10.0,
            10.0,
            [
                Optimum((sx * 1.3494066, sy * 1.3494066), -2.06261187, exact=False)
                for sx in (1, -1)
                for sy in (1, -1)
            ],
        ),
        _any("griewank", griewank, -100.0, 100.0, _zeros, symmetric=True),
        _two("goldstein", goldstein, -2.0, 2.0, [Optimum((0.0, -1.0), 3.0)]),
        _any("dixon", dixon, -10.0, 10.0, _dixon_optimum),
        _any("levy", levy, -10.0, 10.0, _ones),
        _two(
            "bird",
            bird,
            -2 * _PI,
            2 * _PI,
            [
                Optimum((4.70104, 3.15294), -106.764537, exact=False),
                Optimum((-1.58214, -3.13024), -106.764537, exact=False),
            ],
        ),
    ]
}

_ALIASES = {"schwefel": "schwefel_sumprod", "dixonprice": "dixon", "sphere": "dejong", "bohachevsky1": "bohachevsky"}


def registry():
    """All registered benchmark descriptors, in table order."""
    return list(FUNCTIONS.values())


def lookup(name):
    key = name.lower().replace("-", "").replace("_", "") if name not in FUNCTIONS else name
    key = _ALIASES.get(key, key)
    for candidate in (key, name):
        if candidate in FUNCTIONS:
            return FUNCTIONS[candidate]
    compact = {n.replace("_", ""): n for n in FUNCTIONS}
    if key in compact:
        return FUNCTIONS[compact[key]]
    raise KeyError(f"unknown test function {name!r}; valid names: {', '.join(FUNCTIONS)}")


def evaluate(name, x):
    return lookup(name)(x)


def known_optimum(name, dimension=None):
    """First registered ``(x*, f*)`` for ``name`` in ``dimension``, or None."""
    optima = lookup(name).known_optima(dimension)
    if not optima:
        return None
    return np.array(optima[0].x), optima[0].f
