"""
Unified event registration for telemetry and operational counters.

Records events to the telemetry backend and updates the experiment's
operational counters (runs, completed, errors, sampler_calls).
"""

import threading
from datetime import datetime, timezone
from typing import Dict, Any, Optional
from ..types import Backends, EventTypes


def register_event(
    backends: Optional[Backends],
    execution_id: str,
    event_type: str,
    data: Optional[Dict[str, Any]] = None
) -> None:
    """
    Log telemetry and update operational counters based on event type.

    Args:
        backends: Backend services, or None to drop the event
        execution_id: The experiment execution ID
        event_type: Event type from EventTypes
        data: Event-specific data
    """
    if backends is None:
        return

    data = data or {}

    if backends.telemetry is not None:
        backends.telemetry.log_event(
            execution_id,
            event_type,
            timestamp=datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            context=data
        )

    counter = _COUNTERS.get(event_type)
    if counter is None:
        return

    with _COUNTER_LOCK:
        state = backends.operational.get_state(execution_id)
        state[counter] = state.get(counter, 0) + 1
        backends.operational.save_state(execution_id, state)


_COUNTER_LOCK = threading.Lock()

_COUNTERS = {
    EventTypes.RUN_START: "runs",
    EventTypes.RUN_COMPLETE: "completed",
    EventTypes.RUN_ERROR: "errors",
    EventTypes.SAMPLER_CALL: "sampler_calls",
}
