"""
Classical reconstruction baselines
"""

from .types import FloatImage
from .pinv import pinv_reconstruct, pseudoinverse, DEFAULT_RCOND
from .fbp import fbp_reconstruct, filter_projections, ramp_filter
from .sart import sart_reconstruct, DEFAULT_ITERATIONS, DEFAULT_RELAXATION
from .discretize import discretize, BINARY_THRESHOLD

__all__ = [
    "FloatImage",
    "pinv_reconstruct",
    "pseudoinverse",
    "DEFAULT_RCOND",
    "fbp_reconstruct",
    "filter_projections",
    "ramp_filter",
    "sart_reconstruct",
    "DEFAULT_ITERATIONS",
    "DEFAULT_RELAXATION",
    "discretize",
    "BINARY_THRESHOLD",
]
