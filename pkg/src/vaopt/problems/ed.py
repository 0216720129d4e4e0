"""Economic dispatch with quadratic fuel costs and Kron (B-matrix) losses.

File format, one record per line, ``#`` starts a comment::

    a b c pmin pmax        (one line per unit, n lines)
    B_i1 ... B_in          (n lines of loss coefficients, 1/MW)
    PD demand              (demand in MW)
"""

from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

import numpy as np

from .._validation import ConfigurationError, check_vector
from ..base import SearchSpace
from ._base import ProblemInstance, read_rows, write_rows

__all__ = ["EdInstance", "EdEvaluation", "ed_objective", "reference_ed_instance", "load_ed", "save_ed"]

# Six-unit test system of Gaing (2003): fuel costs a*p^2 + b*p + c and the
# quadratic part of its loss matrix (per-unit values on a 100 MVA base
# converted to 1/MW). Unit limits and the 1100 MW demand follow the
# dispatch case this package reproduces.
_A = [0.0070, 0.0095, 0.0090, 0.0090, 0.0080, 0.0075]
_B = [7.0, 10.0, 8.5, 11.0, 10.5, 12.0]
_C = [240.0, 200.0, 220.0, 200.0, 220.0, 190.0]
_PMIN = [100.0, 50.0, 80.0, 50.0, 50.0, 50.0]
_PMAX = [500.0, 200.0, 300.0, 150.0, 200.0, 120.0]
_LOSS = np.array(
    [
        [17, 12, 7, -1, -5, -2],
        [12, 14, 9, 1, -6, -1],
        [7, 9, 31, 0, -10, -6],
        [-1, 1, 0, 24, -6, -8],
        [-5, -6, -10, -6, 129, -2],
        [-2, -1, -6, -8, -2, 150],
    ],
    dtype=float,
) / 1e6


class EdEvaluation(NamedTuple):
    cost: float
    total_power: float
    loss: float
    error: float
    fuel_cost: float


@dataclass(eq=False)
class EdInstance(ProblemInstance):
    """Economic dispatch instance.

    ``coefficients`` has one ``(a, b, c)`` row per unit; ``loss_matrix``
    gives the transmission loss ``p @ B @ p`` in MW. ``penalty_weight``
    multiplies the squared balance error ``PT - PL - PD``.
    """

    coefficients: np.ndarray
    p_min: np.ndarray
    p_max: np.ndarray
    loss_matrix: np.ndarray
    demand: float
    penalty_weight: float = 1e4

    name = "ed"

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=float).reshape(-1, 3)
        n = len(self.coefficients)
        self.p_min = check_vector(self.p_min, n, "p_min")
        self.p_max = check_vector(self.p_max, n, "p_max")
        self.loss_matrix = np.asarray(self.loss_matrix, dtype=float)
        if self.loss_matrix.shape != (n, n):
            raise ConfigurationError(f"loss matrix must be {n}x{n}")
        if np.any(self.p_min > self.p_max):
            raise ConfigurationError("p_min must not exceed p_max")
        if not np.allclose(self.loss_matrix, self.loss_matrix.T):
            raise ConfigurationError("loss matrix must be symmetric")
        if np.linalg.eigvalsh(self.loss_matrix).min() < -1e-12:
            raise ConfigurationError("loss matrix must be positive semidefinite")
        if self.p_max.sum() < self.demand:
            raise ConfigurationError("total capacity is below the demand")

    @property
    def n_units(self):
        return len(self.coefficients)

    @property
    def dimension(self):
        return self.n_units

    def space(self):
        lower, upper = self.p_min.copy(), self.p_max.copy()
        # A unit pinned at a single output still needs a nonempty box.
        pinned = lower >= upper
        upper[pinned] = lower[pinned] + 1e-9
        return SearchSpace(lower, upper)

    def evaluate(self, p):
        p = check_vector(p, self.n_units, "p")
        a, b, c = self.coefficients.T
        total = float(p.sum())
        loss = float(p @ self.loss_matrix @ p)
        error = total - loss - self.demand
        fuel = float(np.sum(a * p**2 + b * p + c))
        return EdEvaluation(fuel + self.penalty_weight * error**2, total, loss, error, fuel)

    def cost(self, x):
        return self.evaluate(x).cost


def ed_objective(instance, p_raw):
    """``(cost, PT, PL, error)`` of a dispatch vector."""
    ev = instance.evaluate(p_raw)
    return ev.cost, ev.total_power, ev.loss, ev.error


def reference_ed_instance(penalty_weight=1e4):
    return EdInstance(
        coefficients=np.column_stack([_A, _B, _C]),
        p_min=np.array(_PMIN),
        p_max=np.array(_PMAX),
        loss_matrix=_LOSS.copy(),
        demand=1100.0,
        penalty_weight=penalty_weight,
    )


def load_ed(path, penalty_weight=1e4):
    rows = read_rows(path)
    if not rows or rows[-1][0].upper() != "PD" or len(rows[-1]) != 2:
        raise ConfigurationError(f"{path}: last record must be 'PD <demand>'")
    body = rows[:-1]
    if len(body) % 2:
        raise ConfigurationError(f"{path}: expected n unit lines followed by n loss-matrix lines")
    n = len(body) // 2
    try:
        units = np.array([[float(v) for v in r] for r in body[:n]])
        loss = np.array([[float(v) for v in r] for r in body[n:]])
        demand = float(rows[-1][1])
    except ValueError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None
    if units.shape != (n, 5) or loss.shape != (n, n):
        raise ConfigurationError(f"{path}: unit lines need 5 values and loss lines {n} values")
    return EdInstance(units[:, :3], units[:, 3], units[:, 4], loss, demand, penalty_weight)


def save_ed(instance, path):
    rows = [list(coef) + [lo, hi] for coef, lo, hi in zip(instance.coefficients, instance.p_min, instance.p_max)]
    rows += [list(r) for r in instance.loss_matrix]
    rows.append(["PD", instance.demand])
    write_rows(path, rows, header="a b c pmin pmax per unit; loss matrix rows (1/MW); PD demand (MW)")


def bundled_ed_path():
    return resources.files("vaopt.problems") / "data" / "ed_reference.txt"
