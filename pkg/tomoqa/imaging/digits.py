"""
8 x 8 4-bit digit images.

load_digits_csv reads the optical-digits CSV layout (64 pixel columns in
[0, 16], optionally a trailing label). render_digit draws a built-in
seven-segment glyph for runs without the dataset.
"""

import csv
from pathlib import Path
from typing import Union

import numpy as np

from .transform import downsample_local_mean, quantize_to_bits
from .types import DigitsFormatError, Image, InvalidValueError

DIGIT_SIDE = 8
DIGIT_BITS = 4
_PIXELS = DIGIT_SIDE * DIGIT_SIDE


def load_digits_csv(path: Union[str, Path], row_index: int) -> Image:
    """
    Load one digit (0-based data row) as an 8 x 8 image with bit depth 4.

    Values above 15 are clipped to 15.

    Raises:
        DigitsFormatError: If the row does not exist, has the wrong column
            count, or contains a non-integer cell
    """
    if row_index < 0:
        raise DigitsFormatError(f"row index must be >= 0, got {row_index}", 1)

    with open(path, newline="", encoding="utf-8") as f:
        line = 0
        for line, row in enumerate(csv.reader(f), start=1):
            if line - 1 != row_index:
                continue
            if len(row) not in (_PIXELS, _PIXELS + 1):
                raise DigitsFormatError(
                    f"expected {_PIXELS} pixel columns (plus optional label), "
                    f"got {len(row)}",
                    line,
                )
            values = []
            for column, cell in enumerate(row[:_PIXELS], start=1):
                try:
                    values.append(int(cell.strip()))
                except ValueError:
                    raise DigitsFormatError(
                        f"column {column}: {cell!r} is not an integer", line
                    ) from None
            pixels = quantize_to_bits(np.asarray(values, dtype=np.float64), DIGIT_BITS)
            return Image(side=DIGIT_SIDE, bit_depth=DIGIT_BITS, pixels=pixels)

    raise DigitsFormatError(f"row {row_index} not found ({line} rows in file)", line + 1)


# Segments a..g of a seven-segment display on a 4 x 7 stroke grid,
# as (row0, col0, row1, col1) inclusive cell ranges.
_SEGMENTS = {
    "a": (0, 0, 0, 3),
    "b": (0, 3, 3, 3),
    "c": (3, 3, 6, 3),
    "d": (6, 0, 6, 3),
    "e": (3, 0, 6, 0),
    "f": (0, 0, 3, 0),
    "g": (3, 0, 3, 3),
}
_GLYPHS = {
    0: "abcdef", 1: "bc", 2: "abdeg", 3: "abcdg", 4: "bcfg",
    5: "acdfg", 6: "acdefg", 7: "abc", 8: "abcdefg", 9: "abcdfg",
}


def render_digit(digit: int) -> Image:
    """
    Built-in 8 x 8 4-bit glyph of a decimal digit.

    Strokes are drawn at full intensity on a 32 x 32 grid and reduced by
    local means, which leaves anti-aliased grey edges.
    """
    if digit not in _GLYPHS:
        raise InvalidValueError(f"digit must be in 0..9, got {digit}")

    scale = 4
    canvas = np.zeros((DIGIT_SIDE * scale, DIGIT_SIDE * scale), dtype=np.int64)
    top, left, cell = 3, 8, 4
    for name in _GLYPHS[digit]:
        r0, c0, r1, c1 = _SEGMENTS[name]
        canvas[
            top + r0 * cell: top + r1 * cell + 3,
            left + c0 * cell: left + c1 * cell + 3,
        ] = (1 << DIGIT_BITS) - 1

    full = Image.from_array(canvas, DIGIT_BITS)
    return downsample_local_mean(full, scale)
