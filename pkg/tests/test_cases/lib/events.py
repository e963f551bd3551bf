"""
Telemetry extraction helpers for tests.
"""

from typing import Any, Dict, List


def extract_event_types(backends, execution_id) -> List[str]:
    """Event types recorded for an execution, in order."""
    return [event["event_type"] for event in backends.telemetry.get_events(execution_id)]


def extract_events(backends, execution_id, event_type: str) -> List[Dict[str, Any]]:
    """
    Context payloads of every event of one type.

    Args:
        backends: LocalBackends instance with telemetry
        execution_id: The execution ID to query
        event_type: One of EventTypes

    Returns:
        List of the events' context dicts
    """
    return [
        event.get("context", {})
        for event in backends.telemetry.get_events(execution_id)
        if event.get("event_type") == event_type
    ]


def extract_counters(backends, execution_id) -> Dict[str, int]:
    """Operational counters (runs, completed, errors, sampler_calls) of an execution."""
    return backends.operational.get_state(execution_id)
