"""
Local file-based operational counters backend
"""

import json
from pathlib import Path
from typing import Dict


class LocalOperationalBackend:
    """File-based storage for per-experiment counters"""

    def __init__(self, storage_dir: str = "./tomoqa_data/operational"):
        """
        Initialize local operational backend

        Args:
            storage_dir: Directory to store counter files
        """
        self.storage_dir = Path(storage_dir)
        self.storage_dir.mkdir(parents=True, exist_ok=True)

    def get_state(self, execution_id: str) -> Dict[str, int]:
        """
        Get counters for execution ID

        Args:
            execution_id: Unique execution identifier

        Returns:
            Counter dictionary, empty if not found
        """
        state_file = self.storage_dir / f"{execution_id}.json"

        if not state_file.exists():
            return {}

        with open(state_file, "r") as f:
            return json.load(f)

    def save_state(self, execution_id: str, state: Dict[str, int]) -> None:
        """
        Save counters for execution ID

        Args:
            execution_id: Unique execution identifier
            state: Counter dictionary to save
        """
        state_file = self.storage_dir / f"{execution_id}.json"

        with open(state_file, "w") as f:
            json.dump(state, f, indent=2, sort_keys=True)

    def cleanup_all(self) -> None:
        """Delete all counter files. Used for test cleanup."""
        for state_file in self.storage_dir.glob("*.json"):
            state_file.unlink()
