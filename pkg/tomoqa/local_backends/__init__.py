"""
Local backends for harness telemetry and counters
"""

from .storage.telemetry import LocalTelemetryBackend
from .storage.operational import LocalOperationalBackend
from .in_memory.telemetry import InMemoryTelemetryBackend
from .in_memory.operational import InMemoryOperationalBackend
from .factory import LocalBackends, create_local_backends, create_in_memory_backends

__all__ = [
    "LocalTelemetryBackend",
    "LocalOperationalBackend",
    "InMemoryTelemetryBackend",
    "InMemoryOperationalBackend",
    "LocalBackends",
    "create_local_backends",
    "create_in_memory_backends",
]
