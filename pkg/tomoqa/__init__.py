"""
tomoqa - tomographic reconstruction as QUBO/Ising optimization
Phantoms, a parallel-beam forward model, QUBO builders, annealing and hybrid
solvers, classical baselines and an experiment harness
"""

from .broker import run_experiment, expand_runs
from .forward import (
    SystemMatrix,
    Sinogram,
    angle_set,
    build_system_matrix,
    project,
    backproject,
)
from .imaging import Image, generate_phantom, load_pgm, save_pgm
from .metrics import rmse, ssim, stability_ratio
from .qubo import (
    QuboModel,
    IsingModel,
    build_binary_qubo,
    build_integer_qubo,
    qubo_energy,
    qubo_to_ising,
    ising_to_qubo,
)
from .samplers import (
    SampleSet,
    exhaustive_solve,
    simulated_annealing_sample,
    hybrid_cqm_solve,
)
from .types import (
    # Backend protocols - for custom telemetry and counters
    Backends,
    TelemetryBackend,
    OperationalBackend,
    # Errors
    TomoqaError,
    DimensionMismatchError,
    ConfigValidationError,
)
from .validation import ExperimentConfig, validate_config
from .init import create_all_methods, setup_experiment

__all__ = [
    # Experiments
    "run_experiment",
    "expand_runs",
    "create_all_methods",
    "setup_experiment",
    "ExperimentConfig",
    "validate_config",
    # Imaging and forward model
    "Image",
    "generate_phantom",
    "load_pgm",
    "save_pgm",
    "SystemMatrix",
    "Sinogram",
    "angle_set",
    "build_system_matrix",
    "project",
    "backproject",
    # Models and solvers
    "QuboModel",
    "IsingModel",
    "build_binary_qubo",
    "build_integer_qubo",
    "qubo_energy",
    "qubo_to_ising",
    "ising_to_qubo",
    "SampleSet",
    "exhaustive_solve",
    "simulated_annealing_sample",
    "hybrid_cqm_solve",
    # Metrics
    "rmse",
    "ssim",
    "stability_ratio",
    # Backend protocols
    "Backends",
    "TelemetryBackend",
    "OperationalBackend",
    # Errors
    "TomoqaError",
    "DimensionMismatchError",
    "ConfigValidationError",
]
