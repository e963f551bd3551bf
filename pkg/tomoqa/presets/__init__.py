"""
Bundled experiment configurations
"""

from pathlib import Path
from typing import List

from ..types import ConfigValidationError

PRESET_DIR = Path(__file__).parent


def list_presets() -> List[str]:
    return sorted(p.stem for p in PRESET_DIR.iterdir() if p.suffix in (".json", ".yaml"))


def preset_path(name: str) -> Path:
    """
    Path of a bundled preset by name (without extension).

    Raises:
        ConfigValidationError: If no preset has that name
    """
    for suffix in (".json", ".yaml"):
        candidate = PRESET_DIR / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    raise ConfigValidationError(
        f"unknown preset '{name}'; available: {', '.join(list_presets())}"
    )
