"""
Test library for tomoqa tests.

Shared helpers for creating backends, reading telemetry, and building
random problems with brute-force oracles.
"""

from .backends import create_test_backends
from .events import extract_event_types, extract_events, extract_counters
from .problems import (
    random_dense_problem,
    random_binary_image,
    tomography_instance,
    all_assignments,
    brute_force_least_squares,
    dense_qubo_energy,
    random_qubo,
)

__all__ = [
    "create_test_backends",
    "extract_event_types",
    "extract_events",
    "extract_counters",
    "random_dense_problem",
    "random_binary_image",
    "tomography_instance",
    "all_assignments",
    "brute_force_least_squares",
    "dense_qubo_energy",
    "random_qubo",
]
