"""
QUBO energy evaluation
"""

from typing import Any

import numpy as np

from ..types import DimensionMismatchError
from .types import NonBinaryAssignmentError, QuboModel


def _binary(q: QuboModel, x: Any) -> np.ndarray:
    arr = np.asarray(x)
    if arr.shape[-1:] != (q.n,):
        raise DimensionMismatchError(
            f"assignment has {arr.shape[-1] if arr.ndim else 0} entries, model has {q.n}"
        )
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise NonBinaryAssignmentError("assignment entries must be 0 or 1")
    return arr.astype(np.float64)


def qubo_energy(q: QuboModel, x: Any) -> float:
    """
    Energy of one binary assignment.

    Raises:
        DimensionMismatchError: If len(x) != q.n
        NonBinaryAssignmentError: If an entry is not 0 or 1
    """
    b = _binary(q, np.asarray(x).ravel())
    return float(q.linear @ b + b @ (q.quadratic @ b) + q.offset)


def qubo_energies(q: QuboModel, assignments: Any) -> np.ndarray:
    """Energies of a (k, n) batch of binary assignments."""
    b = _binary(q, np.atleast_2d(assignments))
    return b @ q.linear + np.einsum("ij,ij->i", b, (q.quadratic @ b.T).T) + q.offset
