"""
Image models and exceptions
"""

from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..types import TomoqaError


class InvalidSizeError(TomoqaError):
    """Raised when an image side or phantom size is not positive"""
    pass


class InvalidFactorError(TomoqaError):
    """Raised when a downsampling factor does not divide the image side"""
    pass


class InvalidValueError(TomoqaError):
    """Raised when pixel values are non-finite or outside the bit range"""
    pass


class ParseError(TomoqaError):
    """Raised when a text file is malformed; carries the 1-based line number"""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class PgmParseError(ParseError):
    """Raised when an ASCII PGM file is malformed"""
    pass


class DigitsFormatError(ParseError):
    """Raised when a digits CSV row is missing or malformed"""
    pass


class PhantomKind(str, Enum):
    """Built-in phantoms. SHEPP_LOGAN is 4-bit, the others are binary."""

    SHEPP_LOGAN = "shepp_logan"
    FOAM = "foam"
    TREE = "tree"
    SNOWFLAKE = "snowflake"
    MOLECULE = "molecule"

    @property
    def bit_depth(self) -> int:
        return 4 if self is PhantomKind.SHEPP_LOGAN else 1


class Image(BaseModel):
    """Square integer image, row-major, with a declared bit depth R.

    Every pixel lies in [0, 2^R - 1].
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    side: int
    bit_depth: int
    pixels: np.ndarray

    @field_validator("pixels", mode="before")
    @classmethod
    def _as_int_vector(cls, value: Any) -> np.ndarray:
        arr = np.asarray(value)
        if arr.dtype.kind == "f":
            if not np.all(np.isfinite(arr)):
                raise InvalidValueError("pixels must be finite")
            if not np.array_equal(arr, np.round(arr)):
                raise InvalidValueError("pixels must be integers")
        elif arr.dtype.kind not in "iub":
            raise InvalidValueError(f"pixels must be integers, got dtype {arr.dtype}")
        arr = arr.astype(np.int64).ravel()
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_invariants(self) -> "Image":
        if self.side < 1:
            raise InvalidSizeError(f"image side must be >= 1, got {self.side}")
        if self.bit_depth < 1:
            raise InvalidValueError(f"bit depth must be >= 1, got {self.bit_depth}")
        if self.pixels.size != self.side * self.side:
            raise InvalidValueError(
                f"expected {self.side * self.side} pixels for side {self.side}, "
                f"got {self.pixels.size}"
            )
        if self.pixels.size and (
            self.pixels.min() < 0 or self.pixels.max() > self.max_value
        ):
            raise InvalidValueError(
                f"pixels must lie in [0, {self.max_value}] for bit depth {self.bit_depth}"
            )
        return self

    @property
    def max_value(self) -> int:
        return (1 << self.bit_depth) - 1

    @property
    def n_pixels(self) -> int:
        return self.side * self.side

    def as_array(self) -> np.ndarray:
        """Pixels as an (N, N) array."""
        return self.pixels.reshape(self.side, self.side)

    @classmethod
    def from_array(cls, array: Any, bit_depth: int) -> "Image":
        arr = np.asarray(array)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvalidSizeError(f"image must be square, got shape {arr.shape}")
        return cls(side=arr.shape[0], bit_depth=bit_depth, pixels=arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self.side == other.side
            and self.bit_depth == other.bit_depth
            and np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None  # type: ignore[assignment]
