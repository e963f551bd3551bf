"""
Moore-Penrose pseudoinverse reconstruction.

The normal-equation form (M^T M)^-1 M^T does not exist for the singular
system matrices used here, so M^+ is formed from the thin SVD with singular
values below rcond * sigma_max treated as zero.
"""

from typing import Any

import numpy as np
import scipy.linalg as la

from ..forward.types import SystemMatrix
from ..samplers.coordinate import as_measurements
from ..types import DimensionMismatchError
from .types import FloatImage

DEFAULT_RCOND = 1e-10


def _dense(matrix: Any) -> np.ndarray:
    if isinstance(matrix, SystemMatrix):
        return matrix.dense()
    if hasattr(matrix, "toarray"):
        return matrix.toarray()
    return np.asarray(matrix, dtype=np.float64)


def pseudoinverse(matrix: Any, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """Dense n x m pseudoinverse of a matrix."""
    a = _dense(matrix)
    if a.size == 0:
        return np.zeros(a.shape[::-1])
    u, s, vt = la.svd(a, full_matrices=False)
    cutoff = rcond * s.max(initial=0.0)
    inverse = np.zeros_like(s)
    keep = s > cutoff
    inverse[keep] = 1.0 / s[keep]
    return (vt.T * inverse) @ u.T


def pinv_reconstruct(matrix: Any, y: Any, rcond: float = DEFAULT_RCOND) -> FloatImage:
    """
    Minimum-norm least-squares image x = M^+ y.

    Raises:
        DimensionMismatchError: If y does not match the matrix rows
    """
    a = _dense(matrix)
    values = as_measurements(y)
    if values.size != a.shape[0]:
        raise DimensionMismatchError(
            f"sinogram has {values.size} values, system matrix has {a.shape[0]} rows"
        )
    return FloatImage.from_vector(pseudoinverse(a, rcond) @ values)
