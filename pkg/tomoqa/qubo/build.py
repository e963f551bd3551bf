"""
QUBO construction from the least-squares objective ||Mx - y||^2.

Expanding the square gives x^T (M^T M) x - 2 (M^T y)^T x + y^T y. For binary
x the diagonal of M^T M folds into the linear terms (x_i^2 = x_i) and each
symmetric off-diagonal pair folds into one upper-triangular slot with
weight 2 (M^T M)_ij.
"""

from typing import Any, Tuple, Union

import numpy as np
import scipy.sparse as sp

from ..forward.types import Sinogram, SystemMatrix
from ..imaging.types import InvalidValueError
from ..types import DimensionMismatchError
from .types import IntegerEncoding, QuboModel

DROP_TOLERANCE = 1e-12

# Largest fully connected graphs that clique-embed on current annealer topologies.
CHIMERA_CLIQUE_CAPACITY = 65
ZEPHYR_CLIQUE_CAPACITY = 100

MatrixLike = Union[SystemMatrix, sp.spmatrix, np.ndarray]
VectorLike = Union[Sinogram, np.ndarray, Any]


def _operands(matrix: MatrixLike, y: VectorLike) -> Tuple[sp.csr_matrix, np.ndarray]:
    if isinstance(matrix, SystemMatrix):
        m = matrix.matrix
    else:
        m = sp.csr_matrix(matrix, dtype=np.float64)
    values = y.values if isinstance(y, Sinogram) else np.asarray(y, dtype=np.float64).ravel()
    if values.size != m.shape[0]:
        raise DimensionMismatchError(
            f"measurement vector has {values.size} values, matrix has {m.shape[0]} rows"
        )
    return m, values


def build_binary_qubo(
    matrix: MatrixLike, y: VectorLike, drop_tolerance: float = DROP_TOLERANCE
) -> QuboModel:
    """
    QUBO whose energy equals ||Mx - y||^2 for every binary x.

    Args:
        matrix: System matrix (m x n)
        y: Measurements (m values)
        drop_tolerance: Coefficients with smaller magnitude are dropped

    Raises:
        DimensionMismatchError: If y does not match the matrix rows
    """
    m, values = _operands(matrix, y)
    gram = (m.T @ m).tocsr()
    linear = gram.diagonal() - 2.0 * (m.T @ values)
    linear[np.abs(linear) < drop_tolerance] = 0.0

    quadratic = (2.0 * sp.triu(gram, k=1)).tocsr()
    quadratic.data[np.abs(quadratic.data) < drop_tolerance] = 0.0
    quadratic.eliminate_zeros()

    return QuboModel(linear=linear, quadratic=quadratic, offset=float(values @ values))


def expansion_matrix(encoding: IntegerEncoding) -> sp.csr_matrix:
    """n_pixels x n_variables matrix E with E[i, i * R + r] = 2^r."""
    weights = sp.csr_matrix(encoding.weights.astype(np.float64)[None, :])
    return sp.kron(sp.identity(encoding.n_pixels, format="csr"), weights, format="csr")


def build_integer_qubo(
    matrix: MatrixLike, y: VectorLike, bits: int, drop_tolerance: float = DROP_TOLERANCE
) -> Tuple[QuboModel, IntegerEncoding]:
    """
    QUBO over the R-bit expansion of each pixel.

    Column (i, r) of the expanded matrix is 2^r times column i of M, so that
    decoding any binary assignment reproduces ||Mx - y||^2 exactly.

    Raises:
        InvalidValueError: If bits < 1
        DimensionMismatchError: If y does not match the matrix rows
    """
    if bits < 1:
        raise InvalidValueError(f"bits per pixel must be >= 1, got {bits}")
    m, values = _operands(matrix, y)
    encoding = IntegerEncoding(n_pixels=m.shape[1], bits=bits)
    expanded = (m @ expansion_matrix(encoding)).tocsr()
    return build_binary_qubo(expanded, values, drop_tolerance), encoding


def required_qubits(n_pixels: int, bits: int) -> int:
    """Logical qubits of the direct formulation: one per pixel bit, N^2 R in total."""
    return n_pixels * bits


def fits_clique(n_variables: int, capacity: int = ZEPHYR_CLIQUE_CAPACITY) -> bool:
    """Whether a fully connected model of this size fits a clique embedding."""
    return n_variables <= capacity
