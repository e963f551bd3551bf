"""
System matrix dump format.

Line 1 is "m n nnz"; each further line is one "row col weight" triple with
17-significant-digit weights, rows in order and columns ascending.
"""

from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import scipy.sparse as sp

from .geometry import angle_set
from .types import MatrixDumpParseError, SystemMatrix

PathLike = Union[str, Path]


def dump_system_matrix(matrix: SystemMatrix, path: PathLike) -> None:
    """Write a system matrix in the "m n nnz" / "row col weight" text format."""
    coo = matrix.matrix.tocoo()
    lines = [f"{matrix.rows} {matrix.cols} {matrix.nnz}"]
    lines.extend(
        f"{r} {c} {w:.17g}"
        for r, c, w in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())
    )
    Path(path).write_text("\n".join(lines) + "\n")


def load_system_matrix(
    path: PathLike, angles: Optional[Sequence[float]] = None
) -> SystemMatrix:
    """
    Read a matrix dump.

    The image side is recovered from n = side^2. When angles are not given
    the views are assumed equally spaced (angle_set).

    Raises:
        MatrixDumpParseError: On a malformed header or triple, an index out of
            range, a duplicate entry, or an entry count different from nnz
    """
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise MatrixDumpParseError("empty file, expected 'm n nnz' header", 1)

    header = lines[0].split()
    if len(header) != 3 or not all(tok.isdigit() for tok in header):
        raise MatrixDumpParseError(f"malformed header {lines[0]!r}, expected 'm n nnz'", 1)
    m, n, nnz = (int(tok) for tok in header)

    side = int(round(n ** 0.5))
    if side < 1 or side * side != n:
        raise MatrixDumpParseError(f"column count {n} is not a square image size", 1)
    if m % side:
        raise MatrixDumpParseError(f"row count {m} is not a multiple of {side} bins", 1)

    rows, cols, weights = [], [], []
    seen = set()
    for number, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise MatrixDumpParseError(f"expected 'row col weight', got {raw!r}", number)
        try:
            r, c, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise MatrixDumpParseError(f"non-numeric token in {raw!r}", number) from None
        if not (0 <= r < m and 0 <= c < n):
            raise MatrixDumpParseError(f"entry ({r}, {c}) outside {m} x {n}", number)
        if not np.isfinite(w) or w <= 0:
            raise MatrixDumpParseError(f"weight must be finite and > 0, got {parts[2]}", number)
        if (r, c) in seen:
            raise MatrixDumpParseError(f"duplicate entry ({r}, {c})", number)
        seen.add((r, c))
        rows.append(r)
        cols.append(c)
        weights.append(w)

    if len(weights) != nnz:
        raise MatrixDumpParseError(
            f"header declares {nnz} entries, found {len(weights)}", len(lines)
        )

    views = m // side
    if angles is None:
        angles = angle_set(views) if views else ()
    matrix = sp.coo_matrix((weights, (rows, cols)), shape=(m, n)).tocsr()
    return SystemMatrix(side=side, angles=tuple(float(a) for a in angles), matrix=matrix)
