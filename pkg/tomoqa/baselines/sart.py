"""
Simultaneous algebraic reconstruction (SART), one view per update.
"""

from typing import Any, Optional

import numpy as np

from ..imaging.types import InvalidValueError
from ..samplers.coordinate import as_csc, as_measurements
from ..types import DimensionMismatchError
from .types import FloatImage

DEFAULT_ITERATIONS = 2
DEFAULT_RELAXATION = 0.15


def sart_reconstruct(
    matrix: Any,
    y: Any,
    iterations: int = DEFAULT_ITERATIONS,
    relaxation: float = DEFAULT_RELAXATION,
    views: Optional[int] = None,
) -> FloatImage:
    """
    SART from x = 0.

    For each view v in angle order:
        x += relaxation * M_v^T (r_v / rowsum_v) / colsum_v,  r_v = y_v - M_v x
    Rays with a zero row sum and pixels with a zero column sum in a view do
    not take part in that view's update.

    Args:
        matrix: System matrix; a SystemMatrix supplies its own view count
        y: Measurements
        iterations: Full passes over all views
        relaxation: Step size in (0, 2)
        views: View count for bare matrices (default: one view)

    Raises:
        InvalidValueError: If relaxation is outside (0, 2) or iterations < 0
        DimensionMismatchError: If y or views do not fit the matrix
    """
    if not 0 < relaxation < 2:
        raise InvalidValueError(f"relaxation must lie in (0, 2), got {relaxation}")
    if iterations < 0:
        raise InvalidValueError(f"iterations must be >= 0, got {iterations}")
    if views is None:
        views = getattr(matrix, "n_views", 1)

    m = as_csc(matrix).tocsr()
    values = as_measurements(y)
    rows, cols = m.shape
    if values.size != rows or views < 1 or rows % views:
        raise DimensionMismatchError(
            f"{values.size} measurements and {views} views do not fit a {rows} x {cols} matrix"
        )

    bins = rows // views
    blocks = []
    for v in range(views):
        block = m[v * bins:(v + 1) * bins]
        row_sums = np.asarray(block.sum(axis=1)).ravel()
        col_sums = np.asarray(block.sum(axis=0)).ravel()
        inv_rows = np.divide(1.0, row_sums, out=np.zeros_like(row_sums), where=row_sums > 0)
        inv_cols = np.divide(1.0, col_sums, out=np.zeros_like(col_sums), where=col_sums > 0)
        blocks.append((block, values[v * bins:(v + 1) * bins], inv_rows, inv_cols))

    x = np.zeros(cols)
    for _ in range(iterations):
        for block, target, inv_rows, inv_cols in blocks:
            correction = block.T @ ((target - block @ x) * inv_rows)
            x += relaxation * correction * inv_cols

    return FloatImage.from_vector(x)
