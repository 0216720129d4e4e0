"""Victoria Amazonica Optimization with PSO/DE baselines, benchmark functions and applied problems."""

from ._validation import ConfigurationError, DimensionError
from .base import RunResult, SearchSpace
from .baselines import DE, PSO, DifferentialEvolution, ParticleSwarmOptimizer, RandomSearch
from .vao import VAO, VaoParams, VictoriaAmazonicaOptimizer, vao_optimize

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "DE",
    "DifferentialEvolution",
    "DimensionError",
    "PSO",
    "ParticleSwarmOptimizer",
    "RandomSearch",
    "RunResult",
    "SearchSpace",
    "VAO",
    "VaoParams",
    "VictoriaAmazonicaOptimizer",
    "vao_optimize",
]
