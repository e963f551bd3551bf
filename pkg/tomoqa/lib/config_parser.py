"""Experiment configuration parsing utilities."""

from pathlib import Path
from typing import Any, Dict, Union

import yaml
from pydantic_core import from_json

from ..types import ConfigValidationError

ConfigSource = Union[str, Path, Dict[str, Any]]


def parse_config(data: ConfigSource) -> Dict[str, Any]:
    """
    Parse a configuration source to a dict.

    Dicts are returned as-is. A path (or a string naming an existing file)
    is read and parsed by extension: .json with pydantic's JSON parser,
    anything else as YAML. Other strings are parsed as YAML text.

    Raises:
        ConfigValidationError: If the source cannot be read or parsed, or
            does not hold a mapping
    """
    if isinstance(data, dict):
        return data

    path = Path(data)
    is_file = isinstance(data, Path) or ("\n" not in data and path.is_file())
    if is_file:
        try:
            text = path.read_text()
        except OSError as e:
            raise ConfigValidationError(f"Cannot read configuration '{path}': {e}") from e
        parsed = _parse_json(text) if path.suffix == ".json" else _parse_yaml(text)
    else:
        parsed = _parse_yaml(str(data))

    if not isinstance(parsed, dict):
        raise ConfigValidationError("Configuration must be a mapping of keys to values")
    return parsed


def _parse_json(text: str) -> Any:
    try:
        return from_json(text)
    except ValueError as e:
        raise ConfigValidationError(f"Invalid JSON configuration: {e}") from e


def _parse_yaml(text: str) -> Any:
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigValidationError(f"Invalid YAML configuration: {e}") from e
