from .geometry import angle_set, build_system_matrix
from .matrix_io import dump_system_matrix, load_system_matrix
from .projection import backproject, project, two_view_problem
from .sinogram_io import load_sinogram_csv, save_sinogram_csv
from .types import (
    InvalidGeometryError,
    MatrixDumpParseError,
    Sinogram,
    SinogramParseError,
    SystemMatrix,
)

__all__ = [
    "angle_set",
    "build_system_matrix",
    "project",
    "backproject",
    "two_view_problem",
    "dump_system_matrix",
    "load_system_matrix",
    "SystemMatrix",
    "Sinogram",
    "InvalidGeometryError",
    "MatrixDumpParseError",
    "SinogramParseError",
    "save_sinogram_csv",
    "load_sinogram_csv",
]
