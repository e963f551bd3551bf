"""
Experiment broker: expands a configuration into runs and dispatches them.

Runs are independent and may execute on a thread pool; results are
collected in the deterministic expansion order, so the table does not
depend on the thread count. A failing run becomes an error row and never
stops the others.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Mapping, Optional, Tuple, Union
from uuid import uuid4

import numpy as np
from pydantic import BaseModel, ConfigDict

from .baselines.pinv import pinv_reconstruct
from .forward.geometry import angle_set, build_system_matrix
from .forward.projection import project
from .forward.types import Sinogram, SystemMatrix
from .imaging.types import Image
from .lib.phantom_spec import resolve_phantom
from .lib.register_event import register_event
from .methods.types import MethodCaller, ReconstructionProblem
from .metrics import rmse, ssim, stability_ratio
from .noise.additive import apply_noise
from .report.types import ErrorRow, ResultRow, ResultTable, StabilityRow
from .types import Backends, ConfigValidationError, EventTypes
from .validation.config import ExperimentConfig


class Run(BaseModel):
    """One (phantom, size, views, noise, method, seed) combination"""
    model_config = ConfigDict(frozen=True)

    phantom: str
    size: int
    views: int
    noisy: bool
    method: str
    seed: int


def expand_runs(config: ExperimentConfig) -> List[Run]:
    """
    All runs of a configuration in report order.

    size_sweep uses views = size; noise_eval adds a noisy twin of every
    clean run with the same seed.
    """
    runs = []
    for phantom in config.phantoms:
        for size in config.sizes:
            view_counts = config.views if config.views is not None else [size]
            for views in view_counts:
                for noisy in ((False, True) if config.kind == "noise_eval" else (False,)):
                    for method in config.methods:
                        for seed in config.seeds:
                            runs.append(Run(
                                phantom=phantom, size=size, views=views,
                                noisy=noisy, method=method, seed=seed,
                            ))
    return runs


def stability_seed(seed: int) -> int:
    """Seed of the second, independent noise realization paired with seed."""
    return int(np.random.SeedSequence([seed, 1]).generate_state(1, dtype=np.uint64)[0])


def run_experiment(
    config: Union[ExperimentConfig, Mapping],
    backends: Optional[Backends],
    methods: Dict[str, MethodCaller],
    execution_id: Optional[str] = None,
) -> ResultTable:
    """
    Execute every run of an experiment.

    Args:
        config: Validated configuration (a mapping is validated first)
        backends: Telemetry and counters; None disables both
        methods: Method name -> caller (see create_all_methods)
        execution_id: Telemetry key; a fresh UUID by default

    Returns:
        ResultTable with result, error and stability rows

    Raises:
        ConfigValidationError: If the configuration is invalid or names a
            method without a caller
    """
    if not isinstance(config, ExperimentConfig):
        from .validation.config import validate_config
        config = validate_config(dict(config))
    missing = [m for m in config.methods if m not in methods]
    if missing:
        raise ConfigValidationError(f"no caller registered for methods: {', '.join(missing)}")

    id = execution_id or str(uuid4())
    threads = config.effective_threads()
    runs = expand_runs(config)
    register_event(backends, id, EventTypes.EXPERIMENT_START, {
        "experiment": config.experiment_name,
        "kind": config.kind,
        "runs": len(runs),
        "threads": threads,
    })

    matrices = {
        (size, views): build_system_matrix(size, angle_set(views))
        for size, views in dict.fromkeys((r.size, r.views) for r in runs)
    }

    def execute(run: Run) -> Union[ResultRow, ErrorRow]:
        return _execute_run(id, config, run, matrices[(run.size, run.views)], methods, backends)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(execute, runs))
    else:
        outcomes = [execute(run) for run in runs]

    stability = []
    if config.kind == "noise_eval":
        stability = _measure_stability(id, config, matrices, backends)

    table = ResultTable(
        experiment=config.experiment_name,
        kind=config.kind,
        rows=[o for o in outcomes if isinstance(o, ResultRow)],
        errors=[o for o in outcomes if isinstance(o, ErrorRow)],
        stability=stability,
        deterministic=config.deterministic,
        execution_id=id,
    )
    register_event(backends, id, EventTypes.EXPERIMENT_COMPLETE, {
        "completed": len(table.rows),
        "errors": len(table.errors),
    })
    return table


def _ground_truth(config: ExperimentConfig, phantom: str, size: int) -> Image:
    """The phantom at the experiment's bit depth; config.bits widens the declared range."""
    truth = resolve_phantom(phantom, size, config.digits_path)
    if config.bits is not None and config.bits != truth.bit_depth:
        truth = Image(side=truth.side, bit_depth=config.bits, pixels=truth.pixels)
    return truth


def _problem_inputs(
    config: ExperimentConfig, run: Run, matrix: SystemMatrix
) -> Tuple[Image, Sinogram, int]:
    truth = _ground_truth(config, run.phantom, run.size)
    bits = truth.bit_depth
    if run.noisy:
        sinogram = apply_noise(truth, matrix, seed=run.seed)
    else:
        sinogram = project(matrix, truth)
    return truth, sinogram, bits


def _execute_run(
    id: str,
    config: ExperimentConfig,
    run: Run,
    matrix: SystemMatrix,
    methods: Dict[str, MethodCaller],
    backends: Optional[Backends],
) -> Union[ResultRow, ErrorRow]:
    labels = {
        "experiment": config.experiment_name,
        "phantom": run.phantom,
        "size": run.size,
        "views": run.views,
        "method": run.method,
        "seed": run.seed,
        "noisy": run.noisy,
    }
    register_event(backends, id, EventTypes.RUN_START, labels)
    started = time.perf_counter()
    try:
        truth, sinogram, bits = _problem_inputs(config, run, matrix)
        problem = ReconstructionProblem(matrix=matrix, sinogram=sinogram, bits=bits, seed=run.seed)
        result = methods[run.method](id, problem)
        estimate = result.image
        residual = matrix.matrix @ estimate.pixels.astype(np.float64) - sinogram.values
        row = ResultRow(
            **labels,
            bits=bits,
            rmse=rmse(truth, estimate),
            ssim=ssim(truth, estimate, data_range=truth.max_value),
            residual=float(np.linalg.norm(residual)),
            wall_time=time.perf_counter() - started,
        )
    except Exception as e:
        reason = f"{type(e).__name__}: {e}"
        register_event(backends, id, EventTypes.RUN_ERROR, {**labels, "error": reason})
        return ErrorRow(**labels, error=reason)

    register_event(backends, id, EventTypes.RUN_COMPLETE, {
        **labels,
        "rmse": row.rmse,
        "ssim": row.ssim,
        "wall_time": row.wall_time,
    })
    return row


def _measure_stability(
    id: str,
    config: ExperimentConfig,
    matrices: Dict[Tuple[int, int], SystemMatrix],
    backends: Optional[Backends],
) -> List[StabilityRow]:
    """Pseudoinverse sensitivity to two independent noise draws per phantom and seed."""
    rows = []
    for (size, views), matrix in matrices.items():
        for phantom in config.phantoms:
            for seed in config.seeds:
                try:
                    truth = _ground_truth(config, phantom, size)
                    y1 = apply_noise(truth, matrix, seed=seed)
                    y2 = apply_noise(truth, matrix, seed=stability_seed(seed))
                    ratio = stability_ratio(
                        pinv_reconstruct(matrix, y1), pinv_reconstruct(matrix, y2), y1, y2
                    )
                except Exception as e:
                    register_event(backends, id, EventTypes.RUN_ERROR, {
                        "phantom": phantom, "seed": seed, "stage": "stability",
                        "error": f"{type(e).__name__}: {e}",
                    })
                    continue
                row = StabilityRow(
                    experiment=config.experiment_name,
                    phantom=phantom, size=size, views=views, seed=seed, ratio=ratio,
                )
                register_event(backends, id, EventTypes.STABILITY_MEASURED, row.model_dump())
                rows.append(row)
    return rows
