"""
Forward-model data structures
"""

from typing import Any, List, Tuple

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..imaging.types import InvalidValueError, ParseError
from ..types import DimensionMismatchError, TomoqaError


class InvalidGeometryError(TomoqaError):
    """Raised when a view count or image side is not positive"""
    pass


class MatrixDumpParseError(ParseError):
    """Raised when a system matrix dump file is malformed"""
    pass


class SystemMatrix(BaseModel):
    """Sparse m x n ray-pixel weight matrix, m = views * bins, n = side^2.

    Rows are view-major: all bins of view 0, then view 1, ... Rows of rays
    that miss the grid are kept and stored empty.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    side: int
    angles: Tuple[float, ...]
    matrix: sp.csr_matrix

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_csr(cls, value: Any) -> sp.csr_matrix:
        matrix = sp.csr_matrix(value, dtype=np.float64)
        matrix.eliminate_zeros()
        matrix.sort_indices()
        return matrix

    @model_validator(mode="after")
    def _check_shape(self) -> "SystemMatrix":
        expected = (len(self.angles) * self.side, self.side * self.side)
        if self.matrix.shape != expected:
            raise DimensionMismatchError(
                f"system matrix shape {self.matrix.shape} does not match "
                f"{len(self.angles)} views x {self.side} bins by {self.side}^2 pixels"
            )
        if self.matrix.nnz and self.matrix.data.min() <= 0:
            raise DimensionMismatchError("stored system matrix weights must be > 0")
        return self

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def n_views(self) -> int:
        return len(self.angles)

    @property
    def n_bins(self) -> int:
        return self.side

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def view_rows(self, view: int) -> sp.csr_matrix:
        """The bins x n block of one view."""
        start = view * self.n_bins
        return self.matrix[start:start + self.n_bins]

    def row_entries(self, row: int) -> List[Tuple[int, float]]:
        """(column, weight) pairs of one row, in column order."""
        lo, hi = self.matrix.indptr[row], self.matrix.indptr[row + 1]
        return list(zip(
            self.matrix.indices[lo:hi].tolist(), self.matrix.data[lo:hi].tolist()
        ))

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SystemMatrix):
            return NotImplemented
        return (
            self.side == other.side
            and self.angles == other.angles
            and self.matrix.shape == other.matrix.shape
            and np.array_equal(self.matrix.indptr, other.matrix.indptr)
            and np.array_equal(self.matrix.indices, other.matrix.indices)
            and np.array_equal(self.matrix.data, other.matrix.data)
        )

    __hash__ = None  # type: ignore[assignment]


class Sinogram(BaseModel):
    """Measurement vector y, view-major (views x bins)."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    views: int
    bins: int
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _as_float_vector(cls, value: Any) -> np.ndarray:
        arr = np.asarray(value, dtype=np.float64).ravel()
        if not np.all(np.isfinite(arr)):
            raise InvalidValueError("sinogram values must be finite")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_layout(self) -> "Sinogram":
        if self.values.size != self.views * self.bins:
            raise DimensionMismatchError(
                f"sinogram has {self.values.size} values, expected "
                f"{self.views} views x {self.bins} bins"
            )
        return self

    def as_array(self) -> np.ndarray:
        """Values as a (views, bins) array."""
        return self.values.reshape(self.views, self.bins)

    def view(self, v: int) -> np.ndarray:
        return self.as_array()[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sinogram):
            return NotImplemented
        return (
            self.views == other.views
            and self.bins == other.bins
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]


class SinogramParseError(ParseError):
    """Raised when a sinogram CSV file is malformed"""
    pass
