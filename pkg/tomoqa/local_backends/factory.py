"""
Factory for creating local backends
"""

from typing import Optional, Any
from .storage.telemetry import LocalTelemetryBackend
from .storage.operational import LocalOperationalBackend
from .in_memory.telemetry import InMemoryTelemetryBackend
from .in_memory.operational import InMemoryOperationalBackend


class LocalBackends:
    """Container for local backends"""

    def __init__(
        self,
        operational_backend: Any,
        telemetry_backend: Optional[Any] = None,
    ):
        self.operational = operational_backend
        self.telemetry = telemetry_backend

    def cleanup_all(self) -> None:
        """
        Cleanup all backend data

        This method is useful for test cleanup to remove all stored data
        """
        self.operational.cleanup_all()
        if self.telemetry:
            self.telemetry.cleanup_all()


def create_local_backends(
    operational_storage_dir: str = "./tomoqa_data/operational",
    telemetry_storage_dir: Optional[str] = "./tomoqa_data/telemetry",
) -> LocalBackends:
    """
    Create local file-based backends

    Args:
        operational_storage_dir: Directory for per-experiment counters
        telemetry_storage_dir: Directory for jsonl telemetry (optional)

    Returns:
        LocalBackends instance with operational and optional telemetry backends
    """
    operational_backend = LocalOperationalBackend(operational_storage_dir)

    telemetry_backend = None
    if telemetry_storage_dir:
        telemetry_backend = LocalTelemetryBackend(telemetry_storage_dir)

    return LocalBackends(operational_backend, telemetry_backend)


def create_in_memory_backends() -> LocalBackends:
    """
    Create in-memory backends for testing

    Returns:
        LocalBackends instance with in-memory backends
    """
    return LocalBackends(
        operational_backend=InMemoryOperationalBackend(),
        telemetry_backend=InMemoryTelemetryBackend(),
    )
