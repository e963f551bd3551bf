"""
ASCII PGM (P2) reading and writing.

maxval encodes the bit depth as 2^R - 1. One image row per text line on
write; on read, tokens may be split across lines and '#' starts a comment.
"""

from pathlib import Path
from typing import Iterator, Tuple, Union

import numpy as np

from .types import Image, PgmParseError

PathLike = Union[str, Path]


def save_pgm(img: Image, path: PathLike) -> None:
    """Write an image as ASCII PGM with maxval 2^R - 1."""
    lines = ["P2", f"{img.side} {img.side}", str(img.max_value)]
    lines.extend(" ".join(str(v) for v in row) for row in img.as_array())
    Path(path).write_text("\n".join(lines) + "\n")


def load_pgm(path: PathLike) -> Image:
    """
    Read an ASCII PGM file.

    Raises:
        PgmParseError: On a wrong magic number, a malformed header, a maxval
            not of the form 2^R - 1, a non-square image, a bad or
            out-of-range pixel, or a wrong pixel count
    """
    tokens = _tokens(Path(path).read_text())

    magic, line = _next(tokens, "magic number", 1)
    if magic != "P2":
        raise PgmParseError(f"unsupported magic number {magic!r}, expected 'P2'", line)

    width, line = _next_int(tokens, "width", line)
    height, line = _next_int(tokens, "height", line)
    if width < 1 or height < 1:
        raise PgmParseError(f"image dimensions must be positive, got {width}x{height}", line)
    if width != height:
        raise PgmParseError(f"image must be square, got {width}x{height}", line)

    maxval, line = _next_int(tokens, "maxval", line)
    bit_depth = _bit_depth(maxval)
    if bit_depth is None:
        raise PgmParseError(f"maxval {maxval} is not of the form 2^R - 1", line)

    pixels = np.empty(width * height, dtype=np.int64)
    for k in range(pixels.size):
        value, line = _next_int(tokens, f"pixel {k}", line)
        if not 0 <= value <= maxval:
            raise PgmParseError(f"pixel {k} value {value} outside [0, {maxval}]", line)
        pixels[k] = value

    extra = next(tokens, None)
    if extra is not None:
        raise PgmParseError(f"unexpected trailing token {extra[0]!r}", extra[1])

    return Image(side=width, bit_depth=bit_depth, pixels=pixels)


def _tokens(text: str) -> Iterator[Tuple[str, int]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        for token in raw.split("#", 1)[0].split():
            yield token, number


def _next(tokens: Iterator[Tuple[str, int]], what: str, line: int) -> Tuple[str, int]:
    item = next(tokens, None)
    if item is None:
        raise PgmParseError(f"unexpected end of file, expected {what}", line)
    return item


def _next_int(tokens: Iterator[Tuple[str, int]], what: str, line: int) -> Tuple[int, int]:
    token, line = _next(tokens, what, line)
    if not token.isdigit():
        raise PgmParseError(f"{what} must be a non-negative integer, got {token!r}", line)
    return int(token), line


def _bit_depth(maxval: int):
    if maxval < 1 or (maxval + 1) & maxval:
        return None
    return maxval.bit_length()
