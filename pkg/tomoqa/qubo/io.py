"""
QUBO text format.

Line 1 is "n offset". Every further line is "i i value" for a linear term
or "i j value" with i < j for a quadratic term. Values are written with 17
significant digits so that export-then-import is coefficient-exact; zero
linear terms are omitted.
"""

from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np

from .types import QuboModel, QuboParseError

PathLike = Union[str, Path]


def export_qubo(q: QuboModel, path: PathLike) -> None:
    lines = [f"{q.n} {q.offset:.17g}"]
    for i in np.flatnonzero(q.linear).tolist():
        lines.append(f"{i} {i} {q.linear[i]:.17g}")
    for (i, j), value in sorted(q.interactions.items()):
        lines.append(f"{i} {j} {value:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def import_qubo(path: PathLike) -> QuboModel:
    """
    Read a model written by export_qubo (or by hand in the same format).

    Raises:
        QuboParseError: On a malformed header or term line, a non-numeric
            token, an index out of range, j < i, or a duplicate key
    """
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].strip():
        raise QuboParseError("empty file, expected 'n offset' header", 1)

    header = lines[0].split()
    if len(header) != 2:
        raise QuboParseError(f"malformed header {lines[0]!r}, expected 'n offset'", 1)
    try:
        n, offset = int(header[0]), float(header[1])
    except ValueError:
        raise QuboParseError(f"non-numeric token in header {lines[0]!r}", 1) from None
    if n < 0:
        raise QuboParseError(f"variable count must be >= 0, got {n}", 1)

    linear = np.zeros(n, dtype=np.float64)
    quadratic: Dict[Tuple[int, int], float] = {}
    seen = set()
    for number, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise QuboParseError(f"expected 'i j value', got {raw!r}", number)
        try:
            i, j, value = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise QuboParseError(f"non-numeric token in {raw!r}", number) from None
        if j < i:
            raise QuboParseError(f"quadratic key ({i}, {j}) must have i < j", number)
        if not (0 <= i < n and 0 <= j < n):
            raise QuboParseError(f"index ({i}, {j}) outside 0..{n - 1}", number)
        if not np.isfinite(value):
            raise QuboParseError(f"value {parts[2]!r} is not finite", number)
        if (i, j) in seen:
            raise QuboParseError(f"duplicate key ({i}, {j})", number)
        seen.add((i, j))
        if i == j:
            linear[i] = value
        else:
            quadratic[(i, j)] = value

    return QuboModel(linear=linear, quadratic=quadratic, offset=offset)
