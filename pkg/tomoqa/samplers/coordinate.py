"""
Integer coordinate descent on ||Mx - y||^2.

Along coordinate i the objective is the parabola c_i (t - t*)^2 + const
with curvature c_i = ||M[:, i]||^2 and vertex t* = x_i + M[:, i] . r / c_i,
r = y - Mx. The integer minimizer is t* rounded half-down (so that of two
equally good integers the smaller wins), clipped to the bounds.
"""

from typing import Any, Optional, Tuple, Union

import numpy as np
import scipy.sparse as sp

from ..forward.types import Sinogram, SystemMatrix
from ..types import DimensionMismatchError

Bounds = Tuple[Any, Any]


def as_csc(matrix: Union[SystemMatrix, sp.spmatrix, np.ndarray]) -> sp.csc_matrix:
    if isinstance(matrix, SystemMatrix):
        matrix = matrix.matrix
    return sp.csc_matrix(matrix, dtype=np.float64)


def as_measurements(y: Any) -> np.ndarray:
    if isinstance(y, Sinogram):
        return y.values
    return np.asarray(y, dtype=np.float64).ravel()


def _bound_vectors(bounds: Bounds, n: int) -> Tuple[np.ndarray, np.ndarray]:
    lower = np.broadcast_to(np.asarray(bounds[0], dtype=np.int64), (n,))
    upper = np.broadcast_to(np.asarray(bounds[1], dtype=np.int64), (n,))
    return lower, upper


def coordinate_descent_sweep(
    matrix: Any,
    y: Any,
    x: Any,
    bounds: Bounds,
    residual: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    One pass over the coordinates in index order.

    Args:
        matrix: System matrix (m x n)
        y: Measurements (m values)
        x: Integer start point within bounds
        bounds: (lower, upper), scalars or per-coordinate vectors
        residual: y - Mx for x, updated in place when given

    Returns:
        New integer vector; the objective never increases. Coordinates with
        an all-zero column are left unchanged.

    Raises:
        DimensionMismatchError: If x or y do not fit the matrix
    """
    m = as_csc(matrix)
    values = as_measurements(y)
    x = np.array(x, dtype=np.int64).ravel()
    if x.size != m.shape[1] or values.size != m.shape[0]:
        raise DimensionMismatchError(
            f"matrix is {m.shape[0]} x {m.shape[1]}, got x of {x.size} and y of {values.size}"
        )
    lower, upper = _bound_vectors(bounds, x.size)
    r = values - m @ x if residual is None else residual

    indptr, indices, data = m.indptr, m.indices, m.data
    for i in range(x.size):
        lo, hi = indptr[i], indptr[i + 1]
        if lo == hi:
            continue
        rows, weights = indices[lo:hi], data[lo:hi]
        curvature = weights @ weights
        if curvature == 0:
            continue
        vertex = x[i] + (weights @ r[rows]) / curvature
        best = int(np.clip(np.ceil(vertex - 0.5), lower[i], upper[i]))
        if best != x[i]:
            r[rows] -= weights * (best - x[i])
            x[i] = best
    return x


def coordinate_descent(
    matrix: Any,
    y: Any,
    x: Any,
    bounds: Bounds,
    max_sweeps: int = 100,
) -> np.ndarray:
    """Repeat sweeps until a fixed point (or max_sweeps)."""
    m = as_csc(matrix)
    values = as_measurements(y)
    current = np.array(x, dtype=np.int64).ravel()
    residual = values - m @ current
    for _ in range(max_sweeps):
        updated = coordinate_descent_sweep(m, values, current, bounds, residual)
        if np.array_equal(updated, current):
            break
        current = updated
    return current
