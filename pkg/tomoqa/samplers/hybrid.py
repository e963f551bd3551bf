"""
Hybrid integer solver for the bounded least-squares model.

A classical local search (integer coordinate descent) alternates with a
sampler-driven block move: the most promising coordinates are freed, their
bit expansion becomes a small QUBO against the residual of the frozen rest,
and simulated annealing proposes new values for the block. A proposal is
kept only if it strictly lowers the objective; otherwise a random tenth of
the coordinates is redrawn within bounds. The best point ever seen is
returned.

The run stops on a wall-clock budget or, when an iteration budget is given,
after that many outer iterations, which makes the result bit-reproducible.
It also stops as soon as the objective reaches the tolerance.
"""

import time
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np

from ..imaging.types import InvalidValueError
from ..qubo.build import build_integer_qubo
from ..qubo.io import export_qubo
from .annealing import simulated_annealing_sample
from .coordinate import as_csc, as_measurements, coordinate_descent
from .lib.selection import improvement_potential, select_subproblem
from .types import AnnealSchedule, ConstrainedQuadraticModel, HybridResult, HybridSettings

DEFAULT_TIME_LIMIT = 5.0

IterationCallback = Callable[[int, float], None]


def hybrid_cqm_solve(
    matrix: Any,
    y: Any,
    bits: int,
    time_limit: float = DEFAULT_TIME_LIMIT,
    seed: Optional[int] = None,
    iterations: Optional[int] = None,
    settings: Optional[HybridSettings] = None,
    on_iteration: Optional[IterationCallback] = None,
) -> HybridResult:
    """
    Minimize ||Mx - y||^2 over integers 0 <= x <= 2^R - 1.

    Args:
        matrix: System matrix
        y: Measurements
        bits: R, bits per pixel
        time_limit: Wall-clock budget in seconds (ignored when iterations is set)
        seed: Seed for selection, perturbation and the sub-samplers
        iterations: Outer-iteration budget; makes the run deterministic
        settings: Solver tuning, HybridSettings() by default
        on_iteration: Called with (iteration, best energy) after each iteration

    Raises:
        InvalidValueError: If bits < 1, time_limit <= 0 or iterations < 1
        DimensionMismatchError: If y does not match the matrix
    """
    if bits < 1:
        raise InvalidValueError(f"bits per pixel must be >= 1, got {bits}")
    cqm = ConstrainedQuadraticModel(
        matrix=as_csc(matrix), y=as_measurements(y), lower=0, upper=(1 << bits) - 1
    )
    return solve_cqm(cqm, bits, time_limit, seed, iterations, settings, on_iteration)


def solve_cqm(
    cqm: ConstrainedQuadraticModel,
    bits: int,
    time_limit: float = DEFAULT_TIME_LIMIT,
    seed: Optional[int] = None,
    iterations: Optional[int] = None,
    settings: Optional[HybridSettings] = None,
    on_iteration: Optional[IterationCallback] = None,
) -> HybridResult:
    """Run the hybrid loop on a prepared model whose bounds span 0..2^bits - 1."""
    if iterations is None and not time_limit > 0:
        raise InvalidValueError(f"time_limit must be > 0, got {time_limit}")
    if iterations is not None and iterations < 1:
        raise InvalidValueError(f"iterations must be >= 1, got {iterations}")
    settings = settings or HybridSettings()
    if settings.debug_dir is not None:
        Path(settings.debug_dir).mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    m = cqm.matrix
    gram = (m.T @ m).tocsr()
    n = cqm.n
    lower = np.full(n, cqm.lower, dtype=np.int64)
    upper = np.full(n, cqm.upper, dtype=np.int64)
    bounds = (lower, upper)

    x = np.zeros(n, dtype=np.int64)
    best_x, best_energy = x.copy(), cqm.objective(x)
    trace = []
    converged = False
    iteration = 0

    while True:
        iteration += 1
        rejected = False
        x = coordinate_descent(m, cqm.y, x, bounds, settings.max_descent_sweeps)
        energy = cqm.objective(x)

        if n and energy > settings.tolerance:
            residual = cqm.y - m @ x
            gradient = m.T @ residual
            potential = improvement_potential(gram, gradient, x, lower, upper)
            block = select_subproblem(potential, gradient, settings.subproblem_size, rng)

            sub_matrix = m[:, block]
            sub_target = residual + sub_matrix @ x[block]
            q, encoding = build_integer_qubo(sub_matrix, sub_target, bits)
            if settings.debug_dir is not None:
                export_qubo(q, Path(settings.debug_dir) / f"subqubo_{iteration:05d}.txt")

            samples = simulated_annealing_sample(
                q,
                num_reads=settings.sub_reads,
                schedule=AnnealSchedule.for_model(q, settings.sub_sweeps),
                seed=int(rng.integers(2 ** 63)),
            )
            proposal = x.copy()
            proposal[block] = encoding.decode_assignment(samples.first.assignment)
            proposed_energy = cqm.objective(proposal)

            if proposed_energy < energy:
                x, energy = proposal, proposed_energy
            else:
                rejected = True

        if energy < best_energy:
            best_x, best_energy = x.copy(), energy
        trace.append(best_energy)
        if on_iteration is not None:
            on_iteration(iteration, best_energy)

        if best_energy <= settings.tolerance:
            converged = True
            break
        if iterations is not None:
            if iteration >= iterations:
                break
        elif time.perf_counter() - started >= time_limit:
            break

        if rejected:
            _perturb(x, lower, upper, settings.perturb_fraction, rng)

    return HybridResult(
        x=best_x,
        energy=best_energy,
        energy_trace=tuple(trace),
        iterations=iteration,
        converged=converged,
        wall_time=time.perf_counter() - started,
    )


def _perturb(
    x: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    fraction: float,
    rng: np.random.Generator,
) -> None:
    """Redraw a random fraction of coordinates uniformly within bounds, in place."""
    count = max(1, int(round(fraction * x.size)))
    picked = rng.choice(x.size, size=count, replace=False)
    x[picked] = rng.integers(lower[picked], upper[picked] + 1)
