"""
Reconstruction method factories.

Every factory closes over the backends (and settings) and returns a caller
taking (execution_id, problem). Sampler-based callers record their sampler
calls as telemetry.
"""

import numpy as np

from ..baselines.discretize import discretize
from ..baselines.fbp import fbp_reconstruct
from ..baselines.pinv import pinv_reconstruct
from ..baselines.sart import sart_reconstruct
from ..imaging.types import Image
from ..lib.register_event import register_event
from ..qubo.build import build_integer_qubo
from ..samplers.annealing import simulated_annealing_sample
from ..samplers.hybrid import hybrid_cqm_solve
from ..samplers.types import AnnealSchedule, HybridSettings
from ..types import Backends, EventTypes
from .types import MethodCaller, MethodSettings, Reconstruction, ReconstructionProblem


def _image(values: np.ndarray, problem: ReconstructionProblem) -> Image:
    return Image(side=problem.matrix.side, bit_depth=problem.bits, pixels=values)


def create_qa_method_caller(backends: Backends, settings: MethodSettings) -> MethodCaller:
    """Create the annealing caller: R-bit QUBO of the whole image, best sample wins."""

    def reconstruct_qa(execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        q, encoding = build_integer_qubo(problem.matrix, problem.sinogram, problem.bits)
        schedule = AnnealSchedule.for_model(q, settings.sweeps)
        samples = simulated_annealing_sample(q, settings.reads, schedule, problem.seed)
        register_event(backends, execution_id, EventTypes.SAMPLER_CALL, {
            "method": "qa",
            "variables": q.n,
            "reads": settings.reads,
            "best_energy": samples.first.energy,
            "wall_time": samples.wall_time,
        })
        pixels = encoding.decode_assignment(samples.first.assignment)
        return Reconstruction(
            image=_image(pixels, problem),
            details={"energy": samples.first.energy, "distinct_samples": len(samples)},
        )

    return reconstruct_qa


def create_hybrid_method_caller(backends: Backends, settings: MethodSettings) -> MethodCaller:
    """Create the hybrid integer solver caller."""
    hybrid_settings = HybridSettings(
        subproblem_size=settings.subproblem_size, debug_dir=settings.debug_dir
    )

    def reconstruct_hybrid(execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        def on_iteration(iteration: int, best_energy: float) -> None:
            register_event(backends, execution_id, EventTypes.HYBRID_ITERATION, {
                "iteration": iteration,
                "best_energy": best_energy,
            })

        result = hybrid_cqm_solve(
            problem.matrix,
            problem.sinogram,
            problem.bits,
            time_limit=settings.time_limit,
            seed=problem.seed,
            iterations=settings.iterations,
            settings=hybrid_settings,
            on_iteration=on_iteration,
        )
        register_event(backends, execution_id, EventTypes.SAMPLER_CALL, {
            "method": "hybrid",
            "variables": problem.matrix.cols * problem.bits,
            "iterations": result.iterations,
            "converged": result.converged,
            "best_energy": result.energy,
            "wall_time": result.wall_time,
        })
        return Reconstruction(
            image=_image(result.x, problem),
            details={
                "energy": result.energy,
                "iterations": result.iterations,
                "converged": result.converged,
            },
        )

    return reconstruct_hybrid


def create_fbp_method_caller(backends: Backends) -> MethodCaller:
    """Create the filtered backprojection caller (discretized output)."""

    def reconstruct_fbp(execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        raw = fbp_reconstruct(problem.sinogram, problem.matrix.angles, problem.matrix.side)
        return Reconstruction(image=discretize(raw, problem.bits), raw=raw)

    return reconstruct_fbp


def create_sart_method_caller(backends: Backends) -> MethodCaller:
    """Create the SART caller (two iterations, relaxation 0.15, discretized output)."""

    def reconstruct_sart(execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        raw = sart_reconstruct(problem.matrix, problem.sinogram)
        return Reconstruction(image=discretize(raw, problem.bits), raw=raw)

    return reconstruct_sart


def create_pinv_method_caller(backends: Backends) -> MethodCaller:
    """Create the pseudoinverse caller (discretized output)."""

    def reconstruct_pinv(execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        raw = pinv_reconstruct(problem.matrix, problem.sinogram)
        return Reconstruction(image=discretize(raw, problem.bits), raw=raw)

    return reconstruct_pinv
