"""
Backend creation helpers for tests.
"""

import os
import tempfile
from typing import Set

from tomoqa.local_backends import create_in_memory_backends, create_local_backends


def _get_verbose_flags() -> Set[str]:
    """Get enabled verbose flags from TOMOQA_VERBOSE environment variable"""
    verbose = os.environ.get("TOMOQA_VERBOSE", "")
    if not verbose:
        return set()
    return set(flag.strip() for flag in verbose.split(","))


class VerboseTelemetryWrapper:
    """Wrapper that prints telemetry events"""

    def __init__(self, backend):
        self._backend = backend

    def log_event(self, execution_id: str, event_type: str, **event_data):
        print(f"\n[TELEMETRY] {event_type}: {event_data.get('context')}")
        return self._backend.log_event(execution_id, event_type, **event_data)

    def get_events(self, execution_id: str):
        return self._backend.get_events(execution_id)

    def cleanup_all(self):
        return self._backend.cleanup_all()


class VerboseOperationalWrapper:
    """Wrapper that prints counter updates"""

    def __init__(self, backend):
        self._backend = backend

    def get_state(self, execution_id: str):
        return self._backend.get_state(execution_id)

    def save_state(self, execution_id: str, state):
        print(f"\n[COUNTERS] {execution_id}: {state}")
        return self._backend.save_state(execution_id, state)

    def cleanup_all(self):
        return self._backend.cleanup_all()


def create_test_backends(test_name: str = "test"):
    """
    Create backends for testing.

    TOMOQA_TEST_BACKEND=file (pytest --backend file) stores telemetry and
    counters under a fresh temporary directory; anything else uses
    in-memory backends.

    Verbose logging controlled via TOMOQA_VERBOSE environment variable:
      TOMOQA_VERBOSE=telemetry,counters

    Args:
        test_name: Prefix of the temporary directory for file backends

    Returns:
        LocalBackends instance
    """
    if os.environ.get("TOMOQA_TEST_BACKEND") == "file":
        root = tempfile.mkdtemp(prefix=f"tomoqa_{test_name}_")
        backends = create_local_backends(
            operational_storage_dir=os.path.join(root, "operational"),
            telemetry_storage_dir=os.path.join(root, "telemetry"),
        )
    else:
        backends = create_in_memory_backends()

    verbose_flags = _get_verbose_flags()

    if "telemetry" in verbose_flags and backends.telemetry:
        backends.telemetry = VerboseTelemetryWrapper(backends.telemetry)

    if "counters" in verbose_flags:
        backends.operational = VerboseOperationalWrapper(backends.operational)

    return backends
