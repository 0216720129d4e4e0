"""Seeded, repeated experiments and algorithm comparisons.

Output layout of one experiment directory::

    summary.csv                     header + one row (see SUMMARY_COLUMNS)
    runtime.csv                     seed,elapsed_s per run (wall time)
    traces/<algo>-<target>-seed<k>.jsonl
                                    one {"iteration": t, "best_cost": c} per line

Everything except ``runtime.csv`` is a pure function of the configuration,
so reruns reproduce those files byte for byte. Floats are written with
``repr`` and round-trip exactly; ``avg_best_cost`` is ``math.fsum`` of the
final trace values divided by the number of repeats and
``std_best_cost`` is the sample standard deviation computed from that mean
(0 for a single repeat).
"""

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .._validation import ConfigurationError
from ..base import SearchSpace
from ..baselines import DifferentialEvolution, ParticleSwarmOptimizer, RandomSearch
from ..functions import lookup
from ..problems.clustering import ClusterInstance, load_features
from ..problems.ed import load_ed
from ..problems.hla import HlaInstance
from ..problems.mst import MstInstance, load_points
from ..problems.pms import load_pms
from ..vao import VictoriaAmazonicaOptimizer
from .config import config_from_mapping, read_compare_spec

__all__ = [
    "SUMMARY_COLUMNS",
    "COMPARE_COLUMNS",
    "SummaryRow",
    "Target",
    "resolve_target",
    "make_optimizer",
    "run_experiment",
    "summarize",
    "read_trace",
    "compare",
    "compare_from_spec",
]

SUMMARY_COLUMNS = ("target", "algorithm", "avg_best_cost", "std_best_cost", "repeats", "seeds", "evaluations")
COMPARE_COLUMNS = SUMMARY_COLUMNS + ("winner",)


@dataclass
class Target:
    name: str
    objective: object
    space: SearchSpace


@dataclass
class SummaryRow:
    target: str
    algorithm: str
    avg_best_cost: float
    std_best_cost: float
    repeats: int
    seeds: list
    evaluations: int
    avg_runtime_s: float = 0.0

    def csv_fields(self):
        return [
            self.target,
            self.algorithm,
            repr(self.avg_best_cost),
            repr(self.std_best_cost),
            str(self.repeats),
            ";".join(str(s) for s in self.seeds),
            str(self.evaluations),
        ]

    def line(self):
        return ",".join(self.csv_fields()) + f"  ({self.avg_runtime_s:.3f} s/run)"


def _function_space(func, config):
    d = config.dimensions or func.arity or 2
    if config.lower is None and config.upper is None:
        return func.space(d)
    if config.lower is None or config.upper is None:
        raise ConfigurationError("lower and upper must be given together")
    lower, upper = np.array(config.lower, dtype=float), np.array(config.upper, dtype=float)
    if lower.size == 1 and upper.size == 1:
        return SearchSpace.uniform(float(lower[0]), float(upper[0]), func.check_dim(d))
    func.check_dim(lower.size)
    return SearchSpace(lower, upper)


def resolve_target(config):
    """Objective, search space and display name for a configuration."""
    if config.function is not None:
        try:
            func = lookup(config.function)
        except KeyError as exc:
            raise ConfigurationError(exc.args[0]) from None
        space = _function_space(func, config)
        return Target(f"{func.name}_d{space.dimension}", func, space)

    path = Path(config.instance)
    if not path.is_file():
        raise ConfigurationError(f"cannot read instance file {str(path)!r}")
    problem = config.problem
    if problem == "ed":
        instance = load_ed(path)
    elif problem == "pms":
        instance = load_pms(path)
    elif problem == "mst":
        points, _ = load_points(path)
        instance = MstInstance(points)
    elif problem == "hla":
        points, demands = load_points(path)
        if demands is None:
            raise ConfigurationError(f"{path}: hub location needs 'x y demand' lines")
        instance = HlaInstance(points, demands, config.facilities)
    else:
        instance = ClusterInstance(load_features(path), config.clusters)
    return Target(f"{problem}_{path.stem}", instance, instance.space())


def make_optimizer(config, seed):
    """Estimator for ``config.algorithm`` seeded with ``seed`` (config must be resolved)."""
    common = {"population_size": config.population, "max_iter": config.iterations, "random_state": seed}
    if config.algorithm == "vao":
        return VictoriaAmazonicaOptimizer(**common, **config.vao_options)
    if config.algorithm == "pso":
        return ParticleSwarmOptimizer(**common)
    if config.algorithm == "de":
        return DifferentialEvolution(**common)
    return RandomSearch(**common)


def summarize(final_costs):
    """``(mean, sample std)`` with the documented summation order."""
    values = [float(v) for v in final_costs]
    n = len(values)
    mean = math.fsum(values) / n
    std = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (n - 1)) if n > 1 else 0.0
    return mean, std


def _trace_text(trace):
    return "".join(
        json.dumps({"iteration": t + 1, "best_cost": float(c)}, allow_nan=True) + "\n" for t, c in enumerate(trace)
    )


def read_trace(path):
    """Best-cost values of a JSON-lines trace file, in iteration order."""
    with open(path, encoding="utf-8") as fh:
        records = [json.loads(line) for line in fh if line.strip()]
    return [r["best_cost"] for r in sorted(records, key=lambda r: r["iteration"])]


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def run_experiment(config, out=None):
    """Run every repeat of ``config`` and return its :class:`SummaryRow`.

    Files are written under ``out`` (default ``config.out``); pass neither
    to run in memory only. Each run's final best cost is the last entry of
    its trace, so the summary can always be rebuilt from the trace files.
    """
    if isinstance(config, dict):
        config = config_from_mapping(config)
    config = config.validate().resolved()
    target = resolve_target(config)
    out = out if out is not None else config.out

    finals, runtimes, evaluations = [], [], 0
    traces = {}
    for seed in config.seeds:
        result = make_optimizer(config, seed).minimize(target.objective, target.space)
        trace = result.best_cost_trace
        finals.append(float(trace[-1]) if len(trace) else float(result.alpha_cost))
        runtimes.append((seed, result.elapsed))
        evaluations = result.evaluations
        traces[seed] = trace

    mean, std = summarize(finals)
    row = SummaryRow(
        target=target.name,
        algorithm=config.algorithm,
        avg_best_cost=mean,
        std_best_cost=std,
        repeats=config.repeats,
        seeds=config.seeds,
        evaluations=evaluations,
        avg_runtime_s=math.fsum(r for _, r in runtimes) / len(runtimes),
    )
    if out is not None:
        out = Path(out)
        for seed in sorted(traces):
            _write(out / "traces" / f"{config.algorithm}-{target.name}-seed{seed}.jsonl", _trace_text(traces[seed]))
        _write(out / "summary.csv", _csv_text(SUMMARY_COLUMNS, [row.csv_fields()]))
        _write(out / "runtime.csv", _csv_text(("seed", "elapsed_s"), [(s, f"{r:.6f}") for s, r in runtimes]))
    return row


def _check_budgets(configs):
    budgets = {}
    for cfg in configs:
        budgets.setdefault(resolve_target(cfg).name, set()).add(cfg.budget)
    for name, values in budgets.items():
        if len(values) > 1:
            raise ConfigurationError(
                f"unequal evaluation budgets for {name}: {', '.join(str(v) for v in sorted(values))}"
            )


def compare(configs, out=None, names=None):
    """Run several experiments and tag every row with its target's winner.

    All experiments on the same target must spend the same number of
    evaluations per run. The winner is the algorithm with the lowest
    average best cost; ties go to the earlier experiment. Returns
    ``(rows, winners)``; writes ``comparison.csv`` and one experiment
    directory per entry under ``out`` when it is given.
    """
    configs = [config_from_mapping(c) if isinstance(c, dict) else c for c in configs]
    if len(configs) < 2:
        raise ConfigurationError("compare needs at least two experiments")
    configs = [c.validate() for c in configs]
    _check_budgets(configs)
    names = names or [f"{i:02d}-{c.algorithm}" for i, c in enumerate(configs)]

    rows = []
    for name, cfg in zip(names, configs):
        sub = None if out is None else Path(out) / name
        rows.append(run_experiment(cfg, out=sub))
    winners = {}
    for row in rows:
        best = winners.get(row.target)
        if best is None or row.avg_best_cost < best.avg_best_cost:
            winners[row.target] = row
    winners = {t: r.algorithm for t, r in winners.items()}
    if out is not None:
        body = [r.csv_fields() + [winners[r.target]] for r in rows]
        _write(Path(out) / "comparison.csv", _csv_text(COMPARE_COLUMNS, body))
    return rows, winners


def compare_from_spec(path, out=None):
    """Run the experiments of a compare specification file."""
    sections = read_compare_spec(path)
    if not sections:
        raise ConfigurationError(f"{path}: no experiment sections")
    names, configs, outs = [], [], set()
    for name, mapping in sections:
        outs.add(mapping.pop("out", None))
        names.append(name)
        configs.append(config_from_mapping(mapping, source=f"{path} [{name}]"))
    if out is None:
        out = outs.pop() if len(outs) == 1 else None
    return compare(configs, out=out, names=names)

