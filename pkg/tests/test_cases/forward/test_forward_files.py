"""
System matrix dumps and sinogram CSV files.
"""

import numpy as np
import pytest

from tomoqa.forward import (
    MatrixDumpParseError,
    SinogramParseError,
    angle_set,
    build_system_matrix,
    dump_system_matrix,
    load_sinogram_csv,
    load_system_matrix,
    project,
    save_sinogram_csv,
)
from tomoqa.noise import apply_noise
from tomoqa.imaging import generate_phantom


def test_matrix_dump_round_trip(tmp_path):
    matrix = build_system_matrix(4, angle_set(3))
    path = tmp_path / "m.txt"
    dump_system_matrix(matrix, path)
    header = path.read_text().splitlines()[0]
    assert header == f"12 16 {matrix.nnz}"
    assert load_system_matrix(path) == matrix


def test_matrix_dump_keeps_explicit_angles(tmp_path):
    matrix = build_system_matrix(2, (0.0, 30.0))
    path = tmp_path / "m.txt"
    dump_system_matrix(matrix, path)
    assert load_system_matrix(path, angles=(0.0, 30.0)) == matrix


@pytest.mark.parametrize("body, line, message", [
    ("", 1, "empty"),
    ("2 1\n", 1, "header"),
    ("2 3 0\n", 1, "square"),
    ("2 1 1\n0 0 1.0\n0 0 2.0\n", 3, "duplicate"),
    ("2 1 1\n0 0 -1.0\n", 2, "> 0"),
    ("2 1 1\n5 0 1.0\n", 2, "outside"),
    ("2 1 2\n0 0 1.0\n", 2, "declares 2"),
    ("2 1 1\n0 zero 1.0\n", 2, "non-numeric"),
])
def test_malformed_matrix_dump(tmp_path, body, line, message):
    path = tmp_path / "bad.txt"
    path.write_text(body)
    with pytest.raises(MatrixDumpParseError, match=message) as info:
        load_system_matrix(path)
    assert info.value.line == line


def test_sinogram_csv_round_trip(tmp_path):
    matrix = build_system_matrix(8, angle_set(4))
    sinogram = apply_noise(generate_phantom("shepp_logan", 8), matrix, seed=3)
    path = tmp_path / "y.csv"
    save_sinogram_csv(sinogram, path)
    assert len(path.read_text().splitlines()) == 4
    assert load_sinogram_csv(path) == sinogram


def test_sinogram_csv_layout(tmp_path):
    matrix = build_system_matrix(2, (0.0,))
    path = tmp_path / "y.csv"
    save_sinogram_csv(project(matrix, np.array([1, 0, 1, 1])), path)
    assert path.read_text() == "2,1\n"


@pytest.mark.parametrize("body, line", [
    ("", 1),
    ("1,2\n3\n", 2),
    ("1,a\n", 1),
    ("1,nan\n", 1),
])
def test_malformed_sinogram_csv(tmp_path, body, line):
    path = tmp_path / "y.csv"
    path.write_text(body)
    with pytest.raises(SinogramParseError) as info:
        load_sinogram_csv(path)
    assert info.value.line == line
