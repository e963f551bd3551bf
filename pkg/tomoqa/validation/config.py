"""
Experiment configuration validation.

Runs once before any reconstruction executes; every problem is reported as
a ConfigValidationError naming the offending key.
"""

import os
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..imaging.types import InvalidValueError
from ..lib.config_parser import ConfigSource, parse_config
from ..lib.phantom_spec import (
    DIGITS_ROW_PREFIX,
    is_digit_spec,
    parse_phantom_spec,
    phantom_bit_depth,
)
from ..methods.types import METHOD_NAMES, MethodName
from ..types import ConfigValidationError

ExperimentKind = Literal["size_sweep", "noise_eval", "underdetermined"]

MIN_SIZE = 4
MAX_SIZE = 32
THREADS_ENV = "TOMOQA_THREADS"


class ExperimentConfig(BaseModel):
    """One experiment: the cross product of phantoms, sizes, views, methods and seeds."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: ExperimentKind
    name: Optional[str] = None
    phantoms: List[str] = Field(min_length=1)
    sizes: List[int] = Field(min_length=1)
    views: Optional[List[int]] = None
    methods: List[MethodName] = Field(min_length=1)
    bits: Optional[int] = Field(default=None, ge=1, le=16)
    seeds: List[int] = Field(min_length=1)
    time_limit: float = Field(default=5.0, gt=0)
    iterations: Optional[int] = Field(default=None, ge=1)
    reads: int = Field(default=100, ge=1)
    sweeps: int = Field(default=1000, ge=1)
    subproblem_size: int = Field(default=12, ge=1)
    digits_path: Optional[str] = None
    output_dir: Optional[str] = None
    threads: Optional[int] = Field(default=None, ge=1)

    @field_validator("phantoms")
    @classmethod
    def _known_phantoms(cls, value: List[str]) -> List[str]:
        for spec in value:
            try:
                parse_phantom_spec(spec)
            except InvalidValueError as e:
                raise ValueError(str(e)) from e
        return value

    @field_validator("sizes")
    @classmethod
    def _power_of_two_sizes(cls, value: List[int]) -> List[int]:
        for size in value:
            if not MIN_SIZE <= size <= MAX_SIZE or size & (size - 1):
                raise ValueError(
                    f"size {size} must be a power of two in [{MIN_SIZE}, {MAX_SIZE}]"
                )
        return value

    @field_validator("views")
    @classmethod
    def _positive_views(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None:
            if not value:
                raise ValueError("views must not be empty")
            if any(v < 1 for v in value):
                raise ValueError("view counts must be >= 1")
        return value

    @field_validator("methods", "seeds")
    @classmethod
    def _unique(cls, value: List[Any]) -> List[Any]:
        if len(set(value)) != len(value):
            raise ValueError("entries must be unique")
        return value

    @model_validator(mode="after")
    def _check_combination(self) -> "ExperimentConfig":
        if self.kind == "underdetermined" and self.views is None:
            raise ValueError("underdetermined experiments need a 'views' list")
        if self.kind == "size_sweep" and self.views is not None:
            raise ValueError("size_sweep uses views = size; remove 'views'")

        digits = [spec for spec in self.phantoms if is_digit_spec(spec)]
        if digits and self.sizes != [8]:
            raise ValueError("digit phantoms are 8 x 8; set sizes to [8]")
        if any(parse_phantom_spec(s)[0] == DIGITS_ROW_PREFIX for s in digits) and not self.digits_path:
            raise ValueError(f"'{DIGITS_ROW_PREFIX}' phantoms need 'digits_path'")

        if self.bits is not None:
            for spec in self.phantoms:
                if phantom_bit_depth(spec) > self.bits:
                    raise ValueError(
                        f"bits={self.bits} cannot represent phantom '{spec}' "
                        f"({phantom_bit_depth(spec)}-bit)"
                    )
        return self

    @property
    def experiment_name(self) -> str:
        return self.name or self.kind

    @property
    def deterministic(self) -> bool:
        """Iteration-budget mode: results are bit-reproducible."""
        return self.iterations is not None

    def effective_threads(self) -> int:
        """Explicit threads, else TOMOQA_THREADS, else 1."""
        if self.threads is not None:
            return self.threads
        raw = os.environ.get(THREADS_ENV, "").strip()
        if not raw:
            return 1
        if not raw.isdigit() or int(raw) < 1:
            raise ConfigValidationError(f"{THREADS_ENV} must be a positive integer, got '{raw}'")
        return int(raw)


def validate_config(data: ConfigSource, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Parse and validate an experiment configuration.

    Args:
        data: Dict, path to a .json/.yaml file, or YAML/JSON text
        overrides: Keys that replace the parsed values (None values are ignored)

    Raises:
        ConfigValidationError: If the configuration is invalid
    """
    parsed = dict(parse_config(data))
    for key, value in (overrides or {}).items():
        if value is not None:
            parsed[key] = value

    try:
        return ExperimentConfig.model_validate(parsed)
    except ValidationError as e:
        problems = []
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "config"
            message = error["msg"].removeprefix("Value error, ")
            problems.append(f"{location}: {message}")
        raise ConfigValidationError("; ".join(problems)) from e
