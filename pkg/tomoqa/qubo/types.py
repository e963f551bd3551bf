"""
QUBO and Ising models, the integer bit encoding, and their exceptions
"""

from typing import Any, Dict, Tuple

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..imaging.types import InvalidValueError, ParseError
from ..types import DimensionMismatchError, TomoqaError


class InvalidModelError(TomoqaError):
    """Raised when model coefficients are non-finite or keys break i < j < n"""
    pass


class QuboParseError(ParseError):
    """Raised when a QUBO text file is malformed"""
    pass


class NonBinaryAssignmentError(TomoqaError):
    """Raised when an assignment passed to a QUBO contains a value outside {0, 1}"""
    pass


Interactions = Dict[Tuple[int, int], float]


def _as_upper(value: Any, n: int) -> sp.csr_matrix:
    """Coerce a dict {(i, j): v} or a matrix to a strictly upper-triangular csr."""
    if isinstance(value, dict):
        rows, cols, data = [], [], []
        for key, coef in value.items():
            i, j = (int(k) for k in key)
            if not 0 <= i < j < n:
                raise InvalidModelError(f"quadratic key {key} must satisfy i < j < {n}")
            rows.append(i)
            cols.append(j)
            data.append(float(coef))
        matrix = sp.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr()
    else:
        matrix = sp.csr_matrix(value, dtype=np.float64)
        if matrix.shape != (n, n):
            raise DimensionMismatchError(
                f"quadratic matrix has shape {matrix.shape}, expected {(n, n)}"
            )
        if sp.tril(matrix).count_nonzero():
            raise InvalidModelError("quadratic terms must be strictly upper triangular")
    matrix = sp.csr_matrix(matrix, dtype=np.float64)
    matrix.eliminate_zeros()
    matrix.sort_indices()
    if not np.all(np.isfinite(matrix.data)):
        raise InvalidModelError("quadratic coefficients must be finite")
    return matrix


def _as_vector(value: Any) -> np.ndarray:
    arr = np.array(value, dtype=np.float64).ravel()
    if not np.all(np.isfinite(arr)):
        raise InvalidModelError("linear coefficients must be finite")
    arr.setflags(write=False)
    return arr


def _interactions(matrix: sp.csr_matrix) -> Interactions:
    coo = matrix.tocoo()
    return {
        (i, j): v for i, j, v in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())
    }


def _same_sparse(a: sp.csr_matrix, b: sp.csr_matrix) -> bool:
    return (
        a.shape == b.shape
        and np.array_equal(a.indptr, b.indptr)
        and np.array_equal(a.indices, b.indices)
        and np.array_equal(a.data, b.data)
    )


class QuboModel(BaseModel):
    """E(x) = sum_i linear_i x_i + sum_{i<j} quadratic_ij x_i x_j + offset, x binary.

    quadratic is stored as a strictly upper-triangular n x n csr matrix;
    a dict {(i, j): value} is accepted on construction.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    linear: np.ndarray
    quadratic: sp.csr_matrix
    offset: float = 0.0

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            linear = _as_vector(data.get("linear", ()))
            data["linear"] = linear
            data["quadratic"] = _as_upper(data.get("quadratic", {}), linear.size)
        return data

    @field_validator("offset")
    @classmethod
    def _finite_offset(cls, value: float) -> float:
        if not np.isfinite(value):
            raise InvalidModelError("offset must be finite")
        return float(value)

    @property
    def n(self) -> int:
        return self.linear.size

    @property
    def interactions(self) -> Interactions:
        """Quadratic terms as {(i, j): value}, i < j."""
        return _interactions(self.quadratic)

    def symmetric(self) -> sp.csr_matrix:
        """Q + Q^T, the coupling matrix used for local fields."""
        return (self.quadratic + self.quadratic.T).tocsr()

    def scaled(self, factor: float) -> "QuboModel":
        return QuboModel(
            linear=self.linear * factor,
            quadratic=self.quadratic * factor,
            offset=self.offset * factor,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuboModel):
            return NotImplemented
        return (
            np.array_equal(self.linear, other.linear)
            and _same_sparse(self.quadratic, other.quadratic)
            and self.offset == other.offset
        )

    __hash__ = None  # type: ignore[assignment]


class IsingModel(BaseModel):
    """E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + offset, s in {-1, +1}."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h: np.ndarray
    J: sp.csr_matrix
    offset: float = 0.0

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            h = _as_vector(data.get("h", ()))
            data["h"] = h
            data["J"] = _as_upper(data.get("J", {}), h.size)
        return data

    @field_validator("offset")
    @classmethod
    def _finite_offset(cls, value: float) -> float:
        if not np.isfinite(value):
            raise InvalidModelError("offset must be finite")
        return float(value)

    @property
    def n(self) -> int:
        return self.h.size

    @property
    def couplings(self) -> Interactions:
        return _interactions(self.J)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IsingModel):
            return NotImplemented
        return (
            np.array_equal(self.h, other.h)
            and _same_sparse(self.J, other.J)
            and self.offset == other.offset
        )

    __hash__ = None  # type: ignore[assignment]


class IntegerEncoding(BaseModel):
    """Pixel i is x_i = sum_r 2^r b[i * bits + r]."""
    model_config = ConfigDict(frozen=True)

    n_pixels: int
    bits: int

    @model_validator(mode="after")
    def _check(self) -> "IntegerEncoding":
        if self.bits < 1:
            raise InvalidValueError(f"bits per pixel must be >= 1, got {self.bits}")
        if self.n_pixels < 0:
            raise InvalidValueError(f"pixel count must be >= 0, got {self.n_pixels}")
        return self

    @property
    def n_variables(self) -> int:
        return self.n_pixels * self.bits

    @property
    def max_value(self) -> int:
        return (1 << self.bits) - 1

    @property
    def weights(self) -> np.ndarray:
        return np.left_shift(1, np.arange(self.bits, dtype=np.int64))

    def variable(self, pixel: int, bit: int) -> int:
        return pixel * self.bits + bit

    def decode_assignment(self, assignment: Any) -> np.ndarray:
        """
        Integer pixel values of a binary assignment.

        Raises:
            DimensionMismatchError: If the assignment length is not n_pixels * bits
            NonBinaryAssignmentError: If an entry is not 0 or 1
        """
        b = np.asarray(assignment).ravel()
        if b.size != self.n_variables:
            raise DimensionMismatchError(
                f"assignment has {b.size} entries, encoding expects {self.n_variables}"
            )
        if b.size and not np.isin(b, (0, 1)).all():
            raise NonBinaryAssignmentError("assignment entries must be 0 or 1")
        return b.astype(np.int64).reshape(self.n_pixels, self.bits) @ self.weights

    def encode_image(self, pixels: Any) -> np.ndarray:
        """
        Binary assignment of integer pixel values.

        Raises:
            DimensionMismatchError: If there are not n_pixels values
            InvalidValueError: If a value lies outside [0, 2^bits - 1]
        """
        x = np.asarray(pixels).ravel()
        if x.size != self.n_pixels:
            raise DimensionMismatchError(
                f"got {x.size} pixels, encoding expects {self.n_pixels}"
            )
        if x.size and (not np.array_equal(x, np.round(x)) or x.min() < 0 or x.max() > self.max_value):
            raise InvalidValueError(f"pixel values must be integers in [0, {self.max_value}]")
        x = x.astype(np.int64)
        return ((x[:, None] >> np.arange(self.bits)) & 1).ravel().astype(np.int8)
