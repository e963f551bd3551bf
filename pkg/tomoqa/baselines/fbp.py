"""
Filtered backprojection with a ramp filter.

Each view is zero-padded to the next power of two of at least 2N, filtered
with the response 2|f| (f from numpy.fft.fftfreq) and backprojected with
linear interpolation at every pixel centre's detector coordinate
s = x cos t - y sin t. The sum over views is scaled by pi / (2V).
"""

from typing import Any, Sequence

import numpy as np

from ..forward.types import Sinogram
from ..types import DimensionMismatchError
from .types import FloatImage


def ramp_filter(padded_size: int) -> np.ndarray:
    return 2.0 * np.abs(np.fft.fftfreq(padded_size))


def filter_projections(projections: np.ndarray) -> np.ndarray:
    """Ramp-filter each row of a (views, bins) array."""
    bins = projections.shape[1]
    padded = 1 << int(np.ceil(np.log2(2 * bins)))
    spectrum = np.fft.fft(projections, n=padded, axis=1) * ramp_filter(padded)
    return np.real(np.fft.ifft(spectrum, axis=1))[:, :bins]


def fbp_reconstruct(sinogram: Any, angles: Sequence[float], side: int) -> FloatImage:
    """
    Reconstruct an N x N image from a view-major sinogram.

    Raises:
        DimensionMismatchError: If the sinogram is not len(angles) x N
    """
    values = sinogram.values if isinstance(sinogram, Sinogram) else np.asarray(sinogram, dtype=np.float64).ravel()
    views = len(angles)
    if views < 1 or values.size != views * side:
        raise DimensionMismatchError(
            f"sinogram has {values.size} values, expected {views} views x {side} bins"
        )
    filtered = filter_projections(values.reshape(views, side))

    half = side / 2.0
    centres = np.arange(side) - half + 0.5
    x = centres[None, :]
    y = -centres[:, None]
    image = np.zeros((side, side))
    for angle, projection in zip(angles, filtered):
        theta = np.radians(angle)
        s = x * np.cos(theta) - y * np.sin(theta)
        image += np.interp(s, centres, projection, left=0.0, right=0.0)

    return FloatImage(side=side, pixels=image * np.pi / (2.0 * views))
