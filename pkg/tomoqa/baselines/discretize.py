"""
Discretization of real reconstructions to the ground truth's bit depth
"""

from typing import Any

import numpy as np

from ..imaging.transform import quantize_to_bits
from ..imaging.types import Image, InvalidValueError
from .types import FloatImage

BINARY_THRESHOLD = 0.5


def discretize(img: Any, bits: int) -> Image:
    """
    Map a real image onto [0, 2^R - 1] integers.

    R = 1 thresholds at 0.5 (0.5 itself maps to 1); R > 1 rounds half-up
    and clips.

    Raises:
        InvalidValueError: If a pixel is non-finite or bits < 1
    """
    if not isinstance(img, FloatImage):
        img = FloatImage.from_vector(img)
    if bits < 1:
        raise InvalidValueError(f"bit depth must be >= 1, got {bits}")
    if bits == 1:
        pixels = (img.pixels >= BINARY_THRESHOLD).astype(np.int64)
    else:
        pixels = quantize_to_bits(img.pixels, bits)
    return Image(side=img.side, bit_depth=bits, pixels=pixels)
