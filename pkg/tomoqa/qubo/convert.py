"""
QUBO <-> Ising conversion through x = (s + 1) / 2.

QUBO (a, b, c) to Ising (h, J, c'):
    h_i = a_i / 2 + sum_j b_ij / 4 over both (i, j) and (j, i)
    J   = b / 4
    c'  = c + sum(a) / 2 + sum(b) / 4
and back:
    a_i = 2 h_i - 2 sum_j J_ij
    b   = 4 J
    c   = c' - sum(h) + sum(J)
"""

from typing import Any

import numpy as np

from ..types import DimensionMismatchError
from .types import IsingModel, QuboModel


def _row_col_sums(upper) -> np.ndarray:
    return np.asarray(upper.sum(axis=1)).ravel() + np.asarray(upper.sum(axis=0)).ravel()


def qubo_to_ising(q: QuboModel) -> IsingModel:
    b = q.quadratic
    h = q.linear / 2.0 + _row_col_sums(b) / 4.0
    offset = q.offset + q.linear.sum() / 2.0 + b.sum() / 4.0
    return IsingModel(h=h, J=b / 4.0, offset=float(offset))


def ising_to_qubo(model: IsingModel) -> QuboModel:
    j = model.J
    linear = 2.0 * model.h - 2.0 * _row_col_sums(j)
    offset = model.offset - model.h.sum() + j.sum()
    return QuboModel(linear=linear, quadratic=j * 4.0, offset=float(offset))


def ising_energy(model: IsingModel, s: Any) -> float:
    """
    Energy of one spin assignment s in {-1, +1}^n.

    Raises:
        DimensionMismatchError: If len(s) != model.n
    """
    spins = np.asarray(s, dtype=np.float64).ravel()
    if spins.size != model.n:
        raise DimensionMismatchError(f"spin vector has {spins.size} entries, model has {model.n}")
    return float(model.h @ spins + spins @ (model.J @ spins) + model.offset)
