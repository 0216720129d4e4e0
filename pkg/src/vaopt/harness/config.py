"""Experiment configuration and its plain-text file format.

A configuration file is a list of ``key = value`` lines; ``#`` and ``;``
start comments. Keys mirror the command-line flags::

    algorithm  = vao          # vao, pso, de or random
    function   = ackley       # or: instance = path/to/file + problem = ed
    dimensions = 15
    lower      = -10          # optional, scalar or comma-separated per dimension
    upper      = 10
    population = 20
    iterations = 500
    repeats    = 10
    seed       = 1            # repeat r runs with seed + r
    out        = results/ackley

VAO tuning keys (``mutation_rate``, ``mutation_damping``,
``mutation_sigma_frac``, ``attraction_base``) may also be given. A compare
specification uses INI sections: keys in ``[DEFAULT]`` are shared and every
other section is one experiment.
"""

import configparser
from dataclasses import dataclass, field, fields, replace

from .._validation import ConfigurationError, check_positive_int

__all__ = [
    "ALGORITHMS",
    "PROBLEMS",
    "PROBLEM_PRESETS",
    "ExperimentConfig",
    "config_from_mapping",
    "parse_config_text",
    "read_config",
    "read_compare_spec",
]

ALGORITHMS = ("vao", "pso", "de", "random")
PROBLEMS = ("ed", "pms", "mst", "hla", "cluster")

# Budget and VAO settings used for each applied problem when the config does
# not set them. Scheduling and hub location have flat or deceptive
# landscapes, so they keep the mutation probability constant.
PROBLEM_PRESETS = {
    "ed": {"population": 40, "iterations": 200},
    "pms": {"population": 20, "iterations": 300, "mutation_damping": 1.0, "mutation_sigma_frac": 0.5},
    "mst": {"population": 35, "iterations": 200},
    "hla": {"population": 40, "iterations": 300, "mutation_damping": 1.0, "mutation_sigma_frac": 0.2},
    "cluster": {"population": 30, "iterations": 300},
}

_VAO_KEYS = ("mutation_rate", "mutation_damping", "mutation_sigma_frac", "attraction_base")


@dataclass
class ExperimentConfig:
    """One seeded, repeated experiment.

    Exactly one of ``function`` and ``instance`` names the target. ``None``
    for ``population``/``iterations`` means the problem preset, or the
    20 x 500 default frame for test functions.
    """

    algorithm: str = "vao"
    function: str | None = None
    instance: str | None = None
    problem: str | None = None
    dimensions: int | None = None
    lower: tuple | None = None
    upper: tuple | None = None
    population: int | None = None
    iterations: int | None = None
    repeats: int = 10
    seed: int = 0
    out: str | None = None
    facilities: int = 4
    clusters: int = 3
    vao_options: dict = field(default_factory=dict)

    def validate(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(f"unknown algorithm {self.algorithm!r}; valid options: {', '.join(ALGORITHMS)}")
        if (self.function is None) == (self.instance is None):
            raise ConfigurationError("give exactly one of function or instance")
        if self.instance is not None and self.problem not in PROBLEMS:
            raise ConfigurationError(f"instance needs problem, one of: {', '.join(PROBLEMS)}")
        check_positive_int(self.repeats, "repeats")
        if self.seed < 0:
            raise ConfigurationError("seed must be non-negative")
        for name in ("population", "iterations", "dimensions"):
            if getattr(self, name) is not None:
                check_positive_int(getattr(self, name), name)
        unknown = set(self.vao_options) - set(_VAO_KEYS)
        if unknown:
            raise ConfigurationError(f"unknown VAO option(s): {', '.join(sorted(unknown))}")
        return self

    def resolved(self):
        """Copy with population, iterations and VAO options filled in."""
        preset = PROBLEM_PRESETS.get(self.problem, {}) if self.instance is not None else {}
        options = {k: v for k, v in preset.items() if k in _VAO_KEYS} if self.algorithm == "vao" else {}
        options.update(self.vao_options)
        return replace(
            self,
            population=self.population or preset.get("population", 20),
            iterations=self.iterations or preset.get("iterations", 500),
            vao_options=options,
        )

    @property
    def seeds(self):
        return [self.seed + r for r in range(self.repeats)]

    @property
    def budget(self):
        """Evaluations per run: one population to start, one per generation."""
        cfg = self.resolved()
        return cfg.population * (cfg.iterations + 1)


_INT_KEYS = {"dimensions", "population", "iterations", "repeats", "seed", "facilities", "clusters"}
_ALIASES = {"algo": "algorithm", "dims": "dimensions", "pop": "population", "iters": "iterations"}


def _bound(text):
    return tuple(float(v) for v in text.replace(",", " ").split())


def config_from_mapping(mapping, source="config"):
    """Build an :class:`ExperimentConfig` from string keys and values."""
    names = {f.name for f in fields(ExperimentConfig)} - {"vao_options"}
    kwargs, options = {}, {}
    for raw_key, raw in mapping.items():
        key = _ALIASES.get(raw_key.strip().lower(), raw_key.strip().lower())
        value = raw.strip() if isinstance(raw, str) else raw
        if key not in names and key not in _VAO_KEYS:
            raise ConfigurationError(f"{source}: unknown key {raw_key!r}")
        try:
            if key in _VAO_KEYS:
                options[key] = float(value)
            elif key in _INT_KEYS:
                kwargs[key] = int(value)
            elif key in ("lower", "upper"):
                kwargs[key] = _bound(value)
            else:
                kwargs[key] = value
        except ValueError:
            raise ConfigurationError(f"{source}: bad value for {key!r}: {value!r}") from None
    return ExperimentConfig(**kwargs, vao_options=options).validate()


def parse_config_text(text, source="config"):
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string("[experiment]\n" + text, source=source)
    except configparser.Error as exc:
        raise ConfigurationError(f"{source}: {' '.join(str(exc).split())}") from None
    return dict(parser["experiment"])


def read_config(path):
    """Read a single-experiment key-value file into a dict of strings."""
    with open(path, encoding="utf-8") as fh:
        return parse_config_text(fh.read(), source=str(path))


def read_compare_spec(path):
    """``(name, mapping)`` pairs, one per section of a compare specification."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh, source=str(path))
    except configparser.Error as exc:
        raise ConfigurationError(f"{path}: {' '.join(str(exc).split())}") from None
    return [(name, dict(parser[name])) for name in parser.sections()]
