"""
Deterministic phantoms.

Shepp-Logan is rasterized from the ten-ellipse table (modified intensities)
on a 256 x 256 grid, rescaled to [0, 15] and reduced by local means.
The binary phantoms are unions and differences of discs and thick segments
in unit coordinates, sampled at pixel centres on a 32 x 32 reference grid
and reduced the same way. Sizes that do not divide the reference grid are
rendered on the smallest multiple of n above it.
"""

from math import ceil
from typing import List, Tuple

import numpy as np

from .transform import downsample_local_mean, quantize_to_bits
from .types import Image, InvalidSizeError, PhantomKind

SHEPP_LOGAN_GRID = 256
BINARY_GRID = 32

# (intensity, semi-axis x, semi-axis y, centre x, centre y, rotation degrees)
SHEPP_LOGAN_ELLIPSES: Tuple[Tuple[float, float, float, float, float, float], ...] = (
    (1.0, 0.6900, 0.9200, 0.00, 0.0000, 0.0),
    (-0.8, 0.6624, 0.8740, 0.00, -0.0184, 0.0),
    (-0.2, 0.1100, 0.3100, 0.22, 0.0000, -18.0),
    (-0.2, 0.1600, 0.4100, -0.22, 0.0000, 18.0),
    (0.1, 0.2100, 0.2500, 0.00, 0.3500, 0.0),
    (0.1, 0.0460, 0.0460, 0.00, 0.1000, 0.0),
    (0.1, 0.0460, 0.0460, 0.00, -0.1000, 0.0),
    (0.1, 0.0460, 0.0230, -0.08, -0.6050, 0.0),
    (0.1, 0.0230, 0.0230, 0.00, -0.6060, 0.0),
    (0.1, 0.0230, 0.0460, 0.06, -0.6050, 0.0),
)

Disc = Tuple[float, float, float]
Segment = Tuple[float, float, float, float, float]


def generate_phantom(kind: PhantomKind, n: int) -> Image:
    """
    Generate an n x n phantom.

    Raises:
        InvalidSizeError: If n < 1
    """
    if n < 1:
        raise InvalidSizeError(f"phantom size must be >= 1, got {n}")
    kind = PhantomKind(kind)

    if kind is PhantomKind.SHEPP_LOGAN:
        grid = _reference_grid(n, SHEPP_LOGAN_GRID)
        full = Image.from_array(_shepp_logan(grid), kind.bit_depth)
    else:
        grid = _reference_grid(n, BINARY_GRID)
        mask = _BINARY_RENDERERS[kind](_unit_centres(grid))
        full = Image.from_array(mask.astype(np.int64), kind.bit_depth)

    return downsample_local_mean(full, grid // n)


def _reference_grid(n: int, base: int) -> int:
    return n * ceil(base / n)


def _unit_centres(grid: int) -> Tuple[np.ndarray, np.ndarray]:
    """Pixel-centre coordinates (u right, v down) in [0, 1]."""
    centres = (np.arange(grid) + 0.5) / grid
    v, u = np.meshgrid(centres, centres, indexing="ij")
    return u, v


def _shepp_logan(grid: int) -> np.ndarray:
    u, v = _unit_centres(grid)
    x = 2.0 * u - 1.0
    y = 1.0 - 2.0 * v
    image = np.zeros((grid, grid))
    for intensity, a, b, x0, y0, phi in SHEPP_LOGAN_ELLIPSES:
        c, s = np.cos(np.radians(phi)), np.sin(np.radians(phi))
        dx, dy = x - x0, y - y0
        inside = ((dx * c + dy * s) / a) ** 2 + ((-dx * s + dy * c) / b) ** 2 <= 1.0
        image[inside] += intensity

    low, high = image.min(), image.max()
    scaled = (image - low) / (high - low) * 15.0
    return quantize_to_bits(scaled, 4)


def _in_discs(u: np.ndarray, v: np.ndarray, discs: List[Disc]) -> np.ndarray:
    mask = np.zeros(u.shape, dtype=bool)
    for cx, cy, r in discs:
        mask |= (u - cx) ** 2 + (v - cy) ** 2 <= r * r
    return mask


def _on_segments(u: np.ndarray, v: np.ndarray, segments: List[Segment]) -> np.ndarray:
    mask = np.zeros(u.shape, dtype=bool)
    for x1, y1, x2, y2, half_width in segments:
        ex, ey = x2 - x1, y2 - y1
        t = np.clip(((u - x1) * ex + (v - y1) * ey) / (ex * ex + ey * ey), 0.0, 1.0)
        mask |= (u - x1 - t * ex) ** 2 + (v - y1 - t * ey) ** 2 <= half_width ** 2
    return mask


def _rotated(segments: List[Segment], fold: int) -> List[Segment]:
    """Copies of segments (given around the origin) rotated about (0.5, 0.5)."""
    out = []
    for k in range(fold):
        c, s = np.cos(2 * np.pi * k / fold), np.sin(2 * np.pi * k / fold)
        for x1, y1, x2, y2, hw in segments:
            out.append((
                0.5 + c * x1 - s * y1, 0.5 + s * x1 + c * y1,
                0.5 + c * x2 - s * y2, 0.5 + s * x2 + c * y2,
                hw,
            ))
    return out


def _foam(centres: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    u, v = centres
    body = _in_discs(u, v, [(0.5, 0.5, 0.44)])
    holes = _in_discs(u, v, [
        (0.35, 0.35, 0.09),
        (0.62, 0.30, 0.07),
        (0.50, 0.56, 0.11),
        (0.29, 0.62, 0.06),
        (0.71, 0.60, 0.08),
        (0.55, 0.79, 0.05),
        (0.79, 0.42, 0.04),
        (0.21, 0.46, 0.04),
        (0.43, 0.17, 0.04),
    ])
    return body & ~holes


def _tree(centres: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    u, v = centres
    return _on_segments(u, v, [
        (0.35, 0.95, 0.65, 0.95, 0.03),
        (0.50, 0.95, 0.50, 0.55, 0.06),
        (0.50, 0.60, 0.25, 0.35, 0.04),
        (0.50, 0.60, 0.75, 0.35, 0.04),
        (0.50, 0.55, 0.50, 0.20, 0.04),
        (0.25, 0.35, 0.12, 0.20, 0.025),
        (0.25, 0.35, 0.30, 0.12, 0.025),
        (0.75, 0.35, 0.88, 0.20, 0.025),
        (0.75, 0.35, 0.70, 0.12, 0.025),
        (0.50, 0.20, 0.40, 0.06, 0.02),
        (0.50, 0.20, 0.60, 0.06, 0.02),
    ])


def _snowflake(centres: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    u, v = centres
    side = np.radians(60.0)
    arm: List[Segment] = [(0.0, 0.0, 0.0, -0.42, 0.035)]
    for start, length in ((0.20, 0.12), (0.32, 0.08)):
        for sign in (-1.0, 1.0):
            arm.append((
                0.0, -start,
                sign * length * np.sin(side), -start - length * np.cos(side),
                0.025,
            ))
    return _on_segments(u, v, _rotated(arm, 6)) | _in_discs(u, v, [(0.5, 0.5, 0.08)])


def _molecule(centres: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    u, v = centres
    ring = [
        (0.5 + 0.25 * np.cos(np.radians(60 * k + 30)),
         0.5 + 0.25 * np.sin(np.radians(60 * k + 30)))
        for k in range(6)
    ]
    pendants = [
        (0.5 + 0.43 * np.cos(np.radians(120 * k + 30)),
         0.5 + 0.43 * np.sin(np.radians(120 * k + 30)))
        for k in range(3)
    ]
    bonds: List[Segment] = [
        (*ring[k], *ring[(k + 1) % 6], 0.025) for k in range(6)
    ]
    bonds += [(*ring[2 * k], *pendants[k], 0.025) for k in range(3)]
    nodes = [(x, y, 0.07) for x, y in ring] + [(x, y, 0.05) for x, y in pendants]
    return _on_segments(u, v, bonds) | _in_discs(u, v, nodes)


_BINARY_RENDERERS = {
    PhantomKind.FOAM: _foam,
    PhantomKind.TREE: _tree,
    PhantomKind.SNOWFLAKE: _snowflake,
    PhantomKind.MOLECULE: _molecule,
}
