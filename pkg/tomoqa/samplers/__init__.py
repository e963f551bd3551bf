"""
Solvers for QUBO and bounded integer least-squares models
"""

from .types import (
    Sample,
    SampleSet,
    AnnealSchedule,
    ConstrainedQuadraticModel,
    HybridSettings,
    HybridResult,
    SizeGuardError,
    ScheduleError,
)
from .exhaustive import exhaustive_solve, MAX_EXHAUSTIVE_VARIABLES
from .annealing import simulated_annealing_sample, default_beta_range
from .coordinate import coordinate_descent_sweep, coordinate_descent
from .hybrid import hybrid_cqm_solve, solve_cqm, DEFAULT_TIME_LIMIT

__all__ = [
    "Sample",
    "SampleSet",
    "AnnealSchedule",
    "ConstrainedQuadraticModel",
    "HybridSettings",
    "HybridResult",
    "SizeGuardError",
    "ScheduleError",
    "exhaustive_solve",
    "MAX_EXHAUSTIVE_VARIABLES",
    "simulated_annealing_sample",
    "default_beta_range",
    "coordinate_descent_sweep",
    "coordinate_descent",
    "hybrid_cqm_solve",
    "solve_cqm",
    "DEFAULT_TIME_LIMIT",
]
