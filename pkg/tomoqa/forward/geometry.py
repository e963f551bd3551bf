"""
Parallel-beam emission geometry and the Siddon system matrix.

The image occupies [-N/2, N/2]^2 with x to the right and y up; pixel
(row r, col c) covers x in [c - N/2, c + 1 - N/2], y in [N/2 - r - 1, N/2 - r].
View angle 0 looks down from the top (rays travel in -y) and angles turn
clockwise. Each view has N rays spaced one pixel apart and centred on the
grid; bin b sits at detector offset s = b - N/2 + 1/2 along
u = (cos t, -sin t). Weights are exact chord lengths; no attenuation.
"""

from typing import List, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from .types import InvalidGeometryError, SystemMatrix

_SNAP = 1e-12
_MIN_CHORD = 1e-12


def angle_set(views: int) -> Tuple[float, ...]:
    """
    Equally spaced view angles k * 180 / V in degrees, k = 0..V-1.

    Raises:
        InvalidGeometryError: If views < 1
    """
    if views < 1:
        raise InvalidGeometryError(f"view count must be >= 1, got {views}")
    return tuple(k * 180.0 / views for k in range(views))


def build_system_matrix(side: int, angles: Sequence[float]) -> SystemMatrix:
    """
    Build the sparse ray-pixel intersection-length matrix.

    Args:
        side: Image side N; there are N bins per view
        angles: View angles in degrees

    Raises:
        InvalidGeometryError: If side < 1 or no angles are given
    """
    if side < 1:
        raise InvalidGeometryError(f"image side must be >= 1, got {side}")
    if len(angles) < 1:
        raise InvalidGeometryError("at least one view angle is required")

    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    weights: List[np.ndarray] = []

    for v, angle in enumerate(angles):
        cos_t, sin_t = _snapped_trig(angle)
        direction = (-sin_t, -cos_t)
        for b in range(side):
            offset = b - side / 2.0 + 0.5
            origin = (offset * cos_t, -offset * sin_t)
            pixels, lengths = _trace_ray(side, origin, direction)
            rows.append(np.full(pixels.size, v * side + b, dtype=np.int64))
            cols.append(pixels)
            weights.append(lengths)

    matrix = sp.coo_matrix(
        (np.concatenate(weights), (np.concatenate(rows), np.concatenate(cols))),
        shape=(len(angles) * side, side * side),
    ).tocsr()
    return SystemMatrix(side=side, angles=tuple(float(a) for a in angles), matrix=matrix)


def _snapped_trig(angle: float) -> Tuple[float, float]:
    rad = np.radians(angle)
    cos_t, sin_t = float(np.cos(rad)), float(np.sin(rad))
    if abs(cos_t) < _SNAP:
        cos_t = 0.0
    if abs(sin_t) < _SNAP:
        sin_t = 0.0
    return cos_t, sin_t


def _trace_ray(
    side: int, origin: Tuple[float, float], direction: Tuple[float, float]
) -> Tuple[np.ndarray, np.ndarray]:
    """Siddon traversal of one ray; returns (pixel indices, chord lengths)."""
    half = side / 2.0
    planes = np.arange(side + 1, dtype=np.float64) - half
    t_low, t_high = -np.inf, np.inf
    crossings = []

    for axis in (0, 1):
        p, d = origin[axis], direction[axis]
        if d == 0.0:
            # constant coordinate; a ray on the far boundary misses the grid
            if not -half <= p < half:
                return np.empty(0, dtype=np.int64), np.empty(0)
            continue
        t = (planes - p) / d
        t_low = max(t_low, min(t[0], t[-1]))
        t_high = min(t_high, max(t[0], t[-1]))
        crossings.append(t)

    if not t_high > t_low:
        return np.empty(0, dtype=np.int64), np.empty(0)

    ts = np.concatenate([np.array([t_low, t_high]), *crossings])
    ts = np.unique(ts[(ts >= t_low) & (ts <= t_high)])
    lengths = np.diff(ts)
    keep = lengths > _MIN_CHORD
    mids = 0.5 * (ts[:-1] + ts[1:])[keep]
    lengths = lengths[keep]

    x = origin[0] + mids * direction[0]
    y = origin[1] + mids * direction[1]
    col = np.clip(np.floor(x + half), 0, side - 1).astype(np.int64)
    row = np.clip(np.ceil(half - y) - 1, 0, side - 1).astype(np.int64)
    return row * side + col, lengths
