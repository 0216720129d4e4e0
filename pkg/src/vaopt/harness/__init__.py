"""Experiment runner: seeded repeats, summaries, comparisons and landscape grids."""

from .config import ALGORITHMS, PROBLEM_PRESETS, PROBLEMS, ExperimentConfig, config_from_mapping, read_config
from .landscape import emit_landscape_grid, write_landscape_grid
from .runner import SummaryRow, compare, compare_from_spec, read_trace, resolve_target, run_experiment, summarize

__all__ = [
    "ALGORITHMS",
    "PROBLEMS",
    "PROBLEM_PRESETS",
    "ExperimentConfig",
    "SummaryRow",
    "compare",
    "compare_from_spec",
    "config_from_mapping",
    "emit_landscape_grid",
    "read_config",
    "read_trace",
    "resolve_target",
    "run_experiment",
    "summarize",
    "write_landscape_grid",
]
