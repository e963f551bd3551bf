"""
Real-valued reconstruction image
"""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..imaging.types import InvalidSizeError, InvalidValueError


class FloatImage(BaseModel):
    """Square real image, row-major. Values are finite and may be negative."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    side: int
    pixels: np.ndarray

    @field_validator("pixels", mode="before")
    @classmethod
    def _as_float_vector(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=np.float64).ravel()
        if not np.all(np.isfinite(arr)):
            raise InvalidValueError("reconstruction pixels must be finite")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check(self) -> "FloatImage":
        if self.side < 1 or self.pixels.size != self.side * self.side:
            raise InvalidSizeError(
                f"expected {self.side}^2 pixels for side {self.side}, got {self.pixels.size}"
            )
        return self

    @classmethod
    def from_vector(cls, values: Any) -> "FloatImage":
        arr = np.asarray(values, dtype=np.float64).ravel()
        side = int(round(np.sqrt(arr.size)))
        return cls(side=side, pixels=arr)

    def as_array(self) -> np.ndarray:
        return self.pixels.reshape(self.side, self.side)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloatImage):
            return NotImplemented
        return self.side == other.side and np.array_equal(self.pixels, other.pixels)

    __hash__ = None  # type: ignore[assignment]
