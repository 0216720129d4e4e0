"""Unrelated parallel machine scheduling with setup times, minimizing C-max.

A solution vector has ``2 * n_tasks`` components in ``[0, 1]``: the first
half picks a machine per task, the second half are random keys ordering the
tasks on each machine. Every task pays its (sequence-independent) setup
time on the machine it runs on, including the first task.

File format: ``n_machines`` rows of processing times followed by
``n_machines`` rows of setup times, one column per task.
"""

import itertools
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .._validation import ConfigurationError
from ..base import SearchSpace
from ._base import ProblemInstance, as_matrix, read_rows, write_rows

__all__ = [
    "PmsInstance",
    "REFERENCE_PROCESSING",
    "reference_pms_instance",
    "pms_decode",
    "pms_cmax",
    "lpt_schedule",
    "brute_force_pms",
    "load_pms",
    "save_pms",
    "BRUTE_FORCE_LIMIT",
]

REFERENCE_PROCESSING = np.array(
    [
        [23, 49, 22, 11, 41, 28, 47, 37, 50, 11],
        [24, 39, 50, 22, 34, 31, 25, 11, 41, 15],
        [47, 42, 29, 50, 27, 47, 14, 15, 28, 10],
    ],
    dtype=float,
)

REFERENCE_SETUP_SEED = 2023
BRUTE_FORCE_LIMIT = 3**8


@dataclass(eq=False)
class PmsInstance(ProblemInstance):
    processing_time: np.ndarray
    setup_time: np.ndarray

    name = "pms"

    def __post_init__(self):
        self.processing_time = np.atleast_2d(np.asarray(self.processing_time, dtype=float))
        self.setup_time = np.atleast_2d(np.asarray(self.setup_time, dtype=float))
        if self.processing_time.shape != self.setup_time.shape:
            raise ConfigurationError("processing and setup matrices must have the same shape")
        if np.any(self.processing_time < 0) or np.any(self.setup_time < 0):
            raise ConfigurationError("times must be non-negative")

    @property
    def n_machines(self):
        return self.processing_time.shape[0]

    @property
    def n_tasks(self):
        return self.processing_time.shape[1]

    @property
    def dimension(self):
        return 2 * self.n_tasks

    def space(self):
        return SearchSpace.uniform(0.0, 1.0, self.dimension)

    def subinstance(self, tasks):
        tasks = list(tasks)
        return PmsInstance(self.processing_time[:, tasks], self.setup_time[:, tasks])

    def cost(self, x):
        return pms_cmax(self, pms_decode(self, x))


def pms_decode(instance, x):
    """Schedule (one ordered task list per machine) encoded by ``x``."""
    x = np.asarray(x, dtype=float)
    n = instance.n_tasks
    machine = np.clip(np.floor(x[:n] * instance.n_machines).astype(int), 0, instance.n_machines - 1)
    order = np.argsort(x[n : 2 * n], kind="stable")
    schedule = [[] for _ in range(instance.n_machines)]
    for task in order:
        schedule[machine[task]].append(int(task))
    return schedule


def machine_completion(instance, schedule):
    p, s = instance.processing_time, instance.setup_time
    return np.array([sum(s[m, t] + p[m, t] for t in tasks) for m, tasks in enumerate(schedule)])


def pms_cmax(instance, schedule):
    return float(machine_completion(instance, schedule).max())


def lpt_schedule(instance):
    """Longest-processing-time-first list scheduling; returns ``(cmax, schedule)``.

    Tasks are taken in decreasing order of their shortest setup-plus-
    processing time and each goes to the machine where it finishes first.
    """
    work = instance.processing_time + instance.setup_time
    order = sorted(range(instance.n_tasks), key=lambda t: (-work[:, t].min(), t))
    load = np.zeros(instance.n_machines)
    schedule = [[] for _ in range(instance.n_machines)]
    for t in order:
        m = int(np.argmin(load + work[:, t]))
        load[m] += work[m, t]
        schedule[m].append(t)
    return float(load.max()), schedule


def brute_force_pms(instance):
    """Exact C-max by enumerating every machine assignment; returns ``(cmax, schedule)``.

    With sequence-independent setups the order on a machine does not change
    its completion time, so assignments alone decide C-max.
    """
    combos = instance.n_machines**instance.n_tasks
    if combos > BRUTE_FORCE_LIMIT:
        raise ConfigurationError(
            f"brute force limited to {BRUTE_FORCE_LIMIT} assignments, instance has {combos}"
        )
    work = instance.processing_time + instance.setup_time
    assign = np.array(list(itertools.product(range(instance.n_machines), repeat=instance.n_tasks)))
    spent = work[assign, np.arange(instance.n_tasks)]
    loads = np.stack([(spent * (assign == m)).sum(axis=1) for m in range(instance.n_machines)], axis=1)
    best = int(np.argmin(loads.max(axis=1)))
    schedule = [np.flatnonzero(assign[best] == m).tolist() for m in range(instance.n_machines)]
    return float(loads[best].max()), schedule


def random_setups(shape, seed, low=3, high=9):
    return np.random.default_rng(seed).integers(low, high + 1, size=shape).astype(float)


def reference_pms_instance(seed=REFERENCE_SETUP_SEED):
    """Processing times of the three-machine, ten-task case with seeded setups in [3, 9]."""
    return PmsInstance(REFERENCE_PROCESSING.copy(), random_setups(REFERENCE_PROCESSING.shape, seed))


def load_pms(path):
    rows = read_rows(path)
    if not rows or len(rows) % 2:
        raise ConfigurationError(f"{path}: expected processing rows followed by as many setup rows")
    try:
        data = as_matrix(rows)
    except ValueError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None
    m = len(rows) // 2
    return PmsInstance(data[:m], data[m:])


def save_pms(instance, path):
    rows = list(instance.processing_time) + list(instance.setup_time)
    write_rows(path, rows, header="processing time rows (machines x tasks), then setup time rows")


def bundled_pms_path():
    return resources.files("vaopt.problems") / "data" / "pms_reference.txt"
