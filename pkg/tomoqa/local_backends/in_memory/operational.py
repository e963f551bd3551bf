"""
In-memory operational counters backend.
"""

from typing import Dict


class InMemoryOperationalBackend:
    """In-memory storage for per-experiment counters"""

    def __init__(self):
        self._states: Dict[str, Dict[str, int]] = {}

    def get_state(self, execution_id: str) -> Dict[str, int]:
        """Get a copy of the counters for an execution ID, empty if unknown"""
        return dict(self._states.get(execution_id, {}))

    def save_state(self, execution_id: str, state: Dict[str, int]) -> None:
        """Replace the counters for an execution ID"""
        self._states[execution_id] = dict(state)

    def cleanup_all(self) -> None:
        """Cleanup all data"""
        self._states.clear()
