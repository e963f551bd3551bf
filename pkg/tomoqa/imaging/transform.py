"""
Quantization and downsampling of integer images.

Rounding is round-half-up everywhere: floor(v + 0.5).
"""

from typing import Any

import numpy as np

from .types import Image, InvalidFactorError, InvalidValueError


def round_half_up(values: Any) -> np.ndarray:
    """Round to the nearest integer, ties toward +inf."""
    return np.floor(np.asarray(values, dtype=np.float64) + 0.5)


def quantize_to_bits(values: Any, bit_depth: int) -> np.ndarray:
    """
    Round real values half-up and clip them to [0, 2^R - 1].

    Args:
        values: Array-like of finite reals
        bit_depth: R, bits per pixel

    Returns:
        int64 array of the same shape

    Raises:
        InvalidValueError: If any value is non-finite or R < 1
    """
    if bit_depth < 1:
        raise InvalidValueError(f"bit depth must be >= 1, got {bit_depth}")
    arr = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise InvalidValueError("values must be finite to quantize")
    return np.clip(round_half_up(arr), 0, (1 << bit_depth) - 1).astype(np.int64)


def downsample_local_mean(img: Image, factor: int) -> Image:
    """
    Replace each factor x factor block by the half-up rounded block mean.

    Raises:
        InvalidFactorError: If factor < 1 or does not divide img.side
    """
    if factor < 1 or img.side % factor != 0:
        raise InvalidFactorError(
            f"factor {factor} does not divide image side {img.side}"
        )
    if factor == 1:
        return img

    side = img.side // factor
    blocks = img.as_array().reshape(side, factor, side, factor).astype(np.float64)
    means = blocks.mean(axis=(1, 3))
    return Image.from_array(quantize_to_bits(means, img.bit_depth), img.bit_depth)
