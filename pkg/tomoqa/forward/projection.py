"""
Forward and adjoint projection
"""

from typing import Tuple, Union

import numpy as np

from ..imaging.types import Image
from ..types import DimensionMismatchError
from .geometry import build_system_matrix
from .types import Sinogram, SystemMatrix

ImageLike = Union[Image, np.ndarray]
SinogramLike = Union[Sinogram, np.ndarray]


def _as_vector(x: ImageLike) -> np.ndarray:
    if isinstance(x, Image):
        return x.pixels.astype(np.float64)
    return np.asarray(x, dtype=np.float64).ravel()


def project(matrix: SystemMatrix, x: ImageLike) -> Sinogram:
    """
    y = M x in double precision.

    Raises:
        DimensionMismatchError: If x does not have M.cols entries
    """
    vector = _as_vector(x)
    if vector.size != matrix.cols:
        raise DimensionMismatchError(
            f"image has {vector.size} pixels, system matrix expects {matrix.cols}"
        )
    return Sinogram(views=matrix.n_views, bins=matrix.n_bins, values=matrix.matrix @ vector)


def backproject(matrix: SystemMatrix, y: SinogramLike) -> np.ndarray:
    """
    Adjoint projection M^T y as a float image vector.

    Raises:
        DimensionMismatchError: If y does not have M.rows entries
    """
    values = y.values if isinstance(y, Sinogram) else np.asarray(y, dtype=np.float64).ravel()
    if values.size != matrix.rows:
        raise DimensionMismatchError(
            f"sinogram has {values.size} values, system matrix expects {matrix.rows}"
        )
    return matrix.matrix.T @ values


def two_view_problem(img: Image) -> Tuple[SystemMatrix, Sinogram]:
    """The 0/90 degree instance of an image: its column sums and row sums."""
    matrix = build_system_matrix(img.side, (0.0, 90.0))
    return matrix, project(matrix, img)
