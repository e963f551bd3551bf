"""
Convenience initialization for tomoqa.

This module wires backends and reconstruction methods so an experiment can
be run in one call.
"""

from typing import Any, Dict, Optional, Tuple, Union

from .broker import run_experiment
from .lib.config_parser import ConfigSource
from .local_backends import create_in_memory_backends, create_local_backends
from .methods.factory import (
    create_fbp_method_caller,
    create_hybrid_method_caller,
    create_pinv_method_caller,
    create_qa_method_caller,
    create_sart_method_caller,
)
from .methods.types import MethodCaller, MethodSettings
from .report.types import ResultTable
from .types import Backends
from .validation.config import ExperimentConfig, validate_config


def create_all_methods(
    backends: Backends,
    settings: Optional[MethodSettings] = None,
) -> Dict[str, MethodCaller]:
    """
    Create every reconstruction method caller.

    Args:
        backends: Backend services (use create_in_memory_backends or create_local_backends)
        settings: Budgets of the sampler-based methods

    Returns:
        Dict mapping method name (qa, hybrid, fbp, sart, pinv) to its caller

    Example:
        backends = create_in_memory_backends()
        methods = create_all_methods(backends, MethodSettings(iterations=20))
        table = run_experiment(config, backends, methods)
    """
    settings = settings or MethodSettings()
    return {
        "qa": create_qa_method_caller(backends, settings),
        "hybrid": create_hybrid_method_caller(backends, settings),
        "fbp": create_fbp_method_caller(backends),
        "sart": create_sart_method_caller(backends),
        "pinv": create_pinv_method_caller(backends),
    }


def method_settings(config: ExperimentConfig, debug_dir: Optional[str] = None) -> MethodSettings:
    """Method budgets taken from an experiment configuration."""
    return MethodSettings(
        reads=config.reads,
        sweeps=config.sweeps,
        time_limit=config.time_limit,
        iterations=config.iterations,
        subproblem_size=config.subproblem_size,
        debug_dir=debug_dir,
    )


def setup_experiment(
    config: Union[ConfigSource, ExperimentConfig],
    overrides: Optional[Dict[str, Any]] = None,
    use_local_storage: bool = False,
    storage_dir: str = "./tomoqa_data",
    debug_dir: Optional[str] = None,
) -> Tuple[ExperimentConfig, Backends, Dict[str, MethodCaller]]:
    """
    One-line setup: validate the configuration, create backends and methods.

    Args:
        config: ExperimentConfig, dict, path or YAML/JSON text
        overrides: Config keys that replace the parsed values
        use_local_storage: If True, use file-based storage. If False, use in-memory.
        storage_dir: Directory for local storage (only used if use_local_storage=True)
        debug_dir: Directory receiving every hybrid sub-QUBO, if set

    Raises:
        ConfigValidationError: If the configuration is invalid
    """
    if not isinstance(config, ExperimentConfig) or overrides:
        source = config.model_dump() if isinstance(config, ExperimentConfig) else config
        config = validate_config(source, overrides)

    if use_local_storage:
        backends = create_local_backends(
            operational_storage_dir=f"{storage_dir}/operational",
            telemetry_storage_dir=f"{storage_dir}/telemetry",
        )
    else:
        backends = create_in_memory_backends()

    methods = create_all_methods(backends, method_settings(config, debug_dir))
    return config, backends, methods


def run(
    config: Union[ConfigSource, ExperimentConfig],
    overrides: Optional[Dict[str, Any]] = None,
    use_local_storage: bool = False,
    storage_dir: str = "./tomoqa_data",
) -> ResultTable:
    """Validate, set up and execute an experiment with default wiring."""
    config, backends, methods = setup_experiment(
        config, overrides, use_local_storage, storage_dir
    )
    return run_experiment(config, backends, methods)


__all__ = [
    "create_all_methods",
    "method_settings",
    "setup_experiment",
    "run",
]
