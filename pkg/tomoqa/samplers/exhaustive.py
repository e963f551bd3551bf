"""
Exhaustive ground-state enumeration, the oracle for small models
"""

import time

import numpy as np

from ..qubo.energy import qubo_energies
from ..qubo.types import QuboModel
from .types import SampleSet, SizeGuardError

MAX_EXHAUSTIVE_VARIABLES = 24
_CHUNK = 1 << 16
# Energies within this relative distance of the minimum count as degenerate.
_DEGENERACY = 1e-9


def exhaustive_solve(q: QuboModel) -> SampleSet:
    """
    Every assignment of minimal energy, one occurrence each.

    Assignment k sets variable i to bit i of k.

    Raises:
        SizeGuardError: If the model has more than 24 variables
    """
    n = q.n
    if n > MAX_EXHAUSTIVE_VARIABLES:
        raise SizeGuardError(
            f"exhaustive enumeration is limited to {MAX_EXHAUSTIVE_VARIABLES} "
            f"variables, model has {n}"
        )
    started = time.perf_counter()
    if n == 0:
        return SampleSet(
            assignments=np.zeros((1, 0), dtype=np.int8),
            energies=np.array([q.offset]),
            occurrences=np.ones(1, dtype=np.int64),
            reads=1,
        )

    shifts = np.arange(n, dtype=np.int64)
    best = np.inf
    candidates = []
    for start in range(0, 1 << n, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        assignments = ((ks[:, None] >> shifts) & 1).astype(np.int8)
        energies = qubo_energies(q, assignments)
        low = energies.min()
        if low < best:
            best = low
            candidates = [c for c in candidates if c[1] <= best + _band(best)]
        keep = energies <= best + _band(best)
        candidates.extend(zip(assignments[keep], energies[keep]))

    ground = np.stack([a for a, e in candidates if e <= best + _band(best)])
    return SampleSet.from_samples(
        q, ground, reads=ground.shape[0], wall_time=time.perf_counter() - started
    )


def _band(energy: float) -> float:
    return _DEGENERACY * max(1.0, abs(energy))
