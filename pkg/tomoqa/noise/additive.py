"""
Signal-dependent additive noise, one independent realization per view.

Each view gets its own PCG64 stream spawned from SeedSequence(seed), so the
result depends only on (x, M, seed) and views can be drawn in any order.
Nonzero pixels receive uniform noise from {-1, 0, 1}, zero pixels from
{0, 1}; noisy pixels are clipped to the image's bit range.
"""

from typing import Optional

import numpy as np

from ..forward.types import Sinogram, SystemMatrix
from ..imaging.types import Image
from ..types import DimensionMismatchError
from .types import NoiseRealization


def view_generators(seed: int, views: int):
    """Independent PCG64 generators, one per view index."""
    children = np.random.SeedSequence(seed).spawn(views)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def draw_noise(x: Image, views: int, seed: int) -> NoiseRealization:
    """Draw the per-view noise images for an image."""
    nonzero = x.pixels != 0
    images = []
    for rng in view_generators(seed, views):
        signed = rng.integers(-1, 2, size=x.n_pixels)
        unsigned = rng.integers(0, 2, size=x.n_pixels)
        images.append(np.where(nonzero, signed, unsigned))
    return NoiseRealization(seed=seed, images=images)


def apply_noise(
    x: Image,
    matrix: SystemMatrix,
    views: Optional[int] = None,
    seed: int = 0,
) -> Sinogram:
    """
    Noisy sinogram: view v sees clip(x + n_v, 0, 2^R - 1) through its own rows.

    Args:
        x: Clean image
        matrix: System matrix with one row block per view
        views: View count; defaults to the matrix's
        seed: Seed of the per-view noise streams

    Raises:
        DimensionMismatchError: If x, M and views disagree
    """
    if x.n_pixels != matrix.cols:
        raise DimensionMismatchError(
            f"image has {x.n_pixels} pixels, system matrix expects {matrix.cols}"
        )
    views = matrix.n_views if views is None else views
    if views != matrix.n_views:
        raise DimensionMismatchError(
            f"{views} views requested, system matrix has {matrix.n_views}"
        )

    realization = draw_noise(x, views, seed)
    values = np.empty(matrix.rows, dtype=np.float64)
    for v, noise in enumerate(realization.images):
        noisy = np.clip(x.pixels + noise, 0, x.max_value).astype(np.float64)
        start = v * matrix.n_bins
        values[start:start + matrix.n_bins] = matrix.view_rows(v) @ noisy
    return Sinogram(views=matrix.n_views, bins=matrix.n_bins, values=values)
