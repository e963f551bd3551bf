"""
Image quality metrics and the reconstruction stability ratio
"""

from typing import Any, Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .types import TomoqaError

SSIM_WINDOW = 7
SSIM_K1 = 0.01
SSIM_K2 = 0.03


class MetricShapeError(TomoqaError):
    """Raised when compared images differ in shape or the dynamic range is not positive"""
    pass


class UndefinedRatioError(TomoqaError):
    """Raised when the stability ratio has identical measurements in the denominator"""
    pass


def _pixels(img: Any) -> np.ndarray:
    if hasattr(img, "as_array"):
        return img.as_array().astype(np.float64)
    return np.asarray(img, dtype=np.float64)


def _pair(a: Any, b: Any):
    x, y = _pixels(a), _pixels(b)
    if x.shape != y.shape:
        raise MetricShapeError(f"shapes differ: {x.shape} vs {y.shape}")
    return x, y


def rmse(a: Any, b: Any) -> float:
    """sqrt(mean((a - b)^2))"""
    x, y = _pair(a, b)
    return float(np.sqrt(np.mean((x - y) ** 2)))


def ssim(a: Any, b: Any, data_range: Optional[float] = None) -> float:
    """
    Mean structural similarity over uniform 7 x 7 windows.

    Images smaller than the window in either direction are treated as one
    window. Statistics are population (biased) moments.

    Args:
        a, b: Images of equal shape (Image, FloatImage or 2-D array)
        data_range: L; defaults to 2^R - 1 of an Image argument

    Raises:
        MetricShapeError: If shapes differ, or L is missing or not positive
    """
    x, y = _pair(a, b)
    if data_range is None:
        data_range = getattr(a, "max_value", None) or getattr(b, "max_value", None)
    if data_range is None or not data_range > 0:
        raise MetricShapeError(f"dynamic range must be > 0, got {data_range}")

    if x.ndim == 2 and min(x.shape) >= SSIM_WINDOW:
        x = sliding_window_view(x, (SSIM_WINDOW, SSIM_WINDOW))
        y = sliding_window_view(y, (SSIM_WINDOW, SSIM_WINDOW))
        axes = (-2, -1)
    else:
        axes = tuple(range(x.ndim))

    mu_x, mu_y = x.mean(axis=axes), y.mean(axis=axes)
    var_x = (x * x).mean(axis=axes) - mu_x * mu_x
    var_y = (y * y).mean(axis=axes) - mu_y * mu_y
    cov = (x * y).mean(axis=axes) - mu_x * mu_y

    c1 = (SSIM_K1 * data_range) ** 2
    c2 = (SSIM_K2 * data_range) ** 2
    index = ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / (
        (mu_x ** 2 + mu_y ** 2 + c1) * (var_x + var_y + c2)
    )
    return float(np.mean(index))


def stability_ratio(x1: Any, x2: Any, y1: Any, y2: Any) -> float:
    """
    ||x1 - x2|| / ||y1 - y2||, the sensitivity of a reconstruction to its data.

    Raises:
        MetricShapeError: If the pairs differ in shape
        UndefinedRatioError: If y1 == y2
    """
    xa, xb = _pair(x1, x2)
    ya, yb = _pair(getattr(y1, "values", y1), getattr(y2, "values", y2))
    denominator = np.linalg.norm(ya - yb)
    if denominator == 0:
        raise UndefinedRatioError("stability ratio is undefined for identical measurements")
    return float(np.linalg.norm(xa - xb) / denominator)
