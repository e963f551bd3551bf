"""
Imaging core: integer images, phantoms, quantization and image file I/O
"""

from .types import (
    Image,
    PhantomKind,
    InvalidSizeError,
    InvalidFactorError,
    InvalidValueError,
    ParseError,
    PgmParseError,
    DigitsFormatError,
)
from .transform import round_half_up, quantize_to_bits, downsample_local_mean
from .phantoms import generate_phantom
from .pgm import save_pgm, load_pgm
from .digits import load_digits_csv, render_digit

__all__ = [
    "Image",
    "PhantomKind",
    "InvalidSizeError",
    "InvalidFactorError",
    "InvalidValueError",
    "ParseError",
    "PgmParseError",
    "DigitsFormatError",
    "round_half_up",
    "quantize_to_bits",
    "downsample_local_mean",
    "generate_phantom",
    "save_pgm",
    "load_pgm",
    "load_digits_csv",
    "render_digit",
]
