"""
Sinogram CSV: one view per line, one comma-separated value per bin,
17 significant digits.
"""

from pathlib import Path
from typing import Union

import numpy as np

from .types import Sinogram, SinogramParseError

PathLike = Union[str, Path]


def save_sinogram_csv(sinogram: Sinogram, path: PathLike) -> None:
    lines = [",".join(f"{v:.17g}" for v in view) for view in sinogram.as_array()]
    Path(path).write_text("\n".join(lines) + "\n")


def load_sinogram_csv(path: PathLike) -> Sinogram:
    """
    Read a sinogram written by save_sinogram_csv.

    Raises:
        SinogramParseError: On an empty file, ragged lines or a non-finite or
            non-numeric value
    """
    rows = []
    for number, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            row = [float(cell) for cell in raw.split(",")]
        except ValueError:
            raise SinogramParseError(f"non-numeric value in {raw!r}", number) from None
        if not np.all(np.isfinite(row)):
            raise SinogramParseError("sinogram values must be finite", number)
        if rows and len(row) != len(rows[0]):
            raise SinogramParseError(
                f"expected {len(rows[0])} bins, got {len(row)}", number
            )
        rows.append(row)
    if not rows:
        raise SinogramParseError("empty sinogram file", 1)
    return Sinogram(views=len(rows), bins=len(rows[0]), values=np.asarray(rows))
