"""
Types for the reconstruction harness
"""

from __future__ import annotations

from typing import Protocol, Optional, Any, Dict, List


class EventTypes:
    """Constants for telemetry event types"""

    EXPERIMENT_START = "experiment_start"
    EXPERIMENT_COMPLETE = "experiment_complete"
    RUN_START = "run_start"
    RUN_COMPLETE = "run_complete"
    RUN_ERROR = "run_error"
    SAMPLER_CALL = "sampler_call"
    HYBRID_ITERATION = "hybrid_iteration"
    STABILITY_MEASURED = "stability_measured"
    REPORT_WRITTEN = "report_written"


class TelemetryBackend(Protocol):
    """Protocol for telemetry backend"""

    def log_event(self, execution_id: str, event_type: str, **event_data) -> None:
        ...

    def get_events(self, execution_id: str) -> List[Dict[str, Any]]:
        ...

    def cleanup_all(self) -> None:
        ...


class OperationalBackend(Protocol):
    """Protocol for per-experiment operational counters.

    Counters are keyed by execution_id and hold at least
    ``runs``, ``completed``, ``errors`` and ``sampler_calls``.
    """

    def get_state(self, execution_id: str) -> Dict[str, int]:
        ...

    def save_state(self, execution_id: str, state: Dict[str, int]) -> None:
        ...


class Backends(Protocol):
    """Protocol for harness backends"""

    operational: OperationalBackend
    telemetry: Optional[TelemetryBackend]


class TomoqaError(Exception):
    """Base class for all tomoqa exceptions"""
    pass


class DimensionMismatchError(TomoqaError):
    """Raised when vector or matrix shapes do not agree"""
    pass


class ConfigValidationError(TomoqaError):
    """Raised when an experiment configuration is invalid (static/startup)"""
    pass
