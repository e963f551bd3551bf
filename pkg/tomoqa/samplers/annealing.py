"""
Simulated annealing over binary QUBO variables.

All reads advance together: the state is a (reads, n) matrix and each
single-variable Metropolis step is applied to one column for every read at
once. Each read owns a PCG64 stream spawned from SeedSequence(seed), used
for its initial state and its acceptance draws, so a read's trajectory does
not depend on how many other reads run beside it.
"""

import time
from typing import List, Optional, Tuple

import numpy as np

from ..qubo.types import QuboModel
from .types import AnnealSchedule, SampleSet, ScheduleError

# Uniform draws are taken per read in blocks of sweeps to bound memory.
_DRAW_BLOCK = 1 << 20


def default_beta_range(q: QuboModel) -> Tuple[float, float]:
    """
    Inverse temperatures scaled to the model.

    The hot end accepts the largest possible single-flip rise with
    probability 1/2; the cold end accepts the smallest nonzero coefficient
    as a rise with probability 1/100. Models without coefficients get the
    fixed default range.
    """
    coupling = abs(q.symmetric())
    max_delta = float(np.max(np.abs(q.linear) + np.asarray(coupling.sum(axis=1)).ravel(), initial=0.0))
    magnitudes = np.concatenate([np.abs(q.linear), np.abs(q.quadratic.data)])
    magnitudes = magnitudes[magnitudes > 0]
    if max_delta <= 0 or magnitudes.size == 0:
        default = AnnealSchedule()
        return default.beta_start, default.beta_end

    beta_start = np.log(2.0) / max_delta
    beta_end = np.log(100.0) / float(magnitudes.min())
    return float(beta_start), float(beta_end)


def _streams(seed: Optional[int], reads: int) -> List[np.random.Generator]:
    children = np.random.SeedSequence(seed).spawn(reads)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def simulated_annealing_sample(
    q: QuboModel,
    num_reads: int = 100,
    schedule: Optional[AnnealSchedule] = None,
    seed: Optional[int] = None,
) -> SampleSet:
    """
    Sample low-energy assignments with single-flip Metropolis annealing.

    Each read starts from a uniformly random assignment and performs one
    sweep (variables in index order) per scheduled beta. A flip with energy
    change dE is accepted when dE <= 0 or u < exp(-beta dE).

    Args:
        q: Model with at least one variable
        num_reads: Independent reads
        schedule: Defaults to AnnealSchedule()
        seed: Seed of the per-read streams; None draws fresh entropy

    Returns:
        SampleSet of the final states of all reads

    Raises:
        ScheduleError: If num_reads < 1 or the model has no variables
    """
    if num_reads < 1:
        raise ScheduleError(f"num_reads must be >= 1, got {num_reads}")
    if q.n < 1:
        raise ScheduleError("cannot anneal a model without variables")
    schedule = schedule or AnnealSchedule()
    started = time.perf_counter()

    n = q.n
    coupling = q.symmetric().toarray()
    streams = _streams(seed, num_reads)
    state = np.stack([rng.integers(0, 2, size=n) for rng in streams]).astype(np.float64)
    field = state @ coupling + q.linear

    betas = schedule.betas()
    block = max(1, min(betas.size, _DRAW_BLOCK // (n * num_reads)))
    for start in range(0, betas.size, block):
        chunk = betas[start:start + block]
        draws = np.stack([rng.random((chunk.size, n)) for rng in streams], axis=1)
        for beta, uniforms in zip(chunk, draws):
            for i in range(n):
                delta = (1.0 - 2.0 * state[:, i]) * field[:, i]
                with np.errstate(over="ignore"):
                    accept = (delta <= 0) | (uniforms[:, i] < np.exp(-beta * delta))
                if not accept.any():
                    continue
                step = np.where(accept, 1.0 - 2.0 * state[:, i], 0.0)
                state[:, i] += step
                field += np.outer(step, coupling[i])

    return SampleSet.from_samples(
        q,
        state.astype(np.int8),
        seed=seed,
        reads=num_reads,
        wall_time=time.perf_counter() - started,
    )
