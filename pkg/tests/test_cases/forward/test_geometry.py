"""
Parallel-beam geometry and the Siddon system matrix.

Rows are view-major, N bins per view; weights are exact chord lengths.
"""

import numpy as np
import pytest

from tomoqa.forward import InvalidGeometryError, angle_set, build_system_matrix


def test_angle_sets():
    assert angle_set(2) == (0.0, 90.0)
    assert angle_set(4) == (0.0, 45.0, 90.0, 135.0)
    assert angle_set(1) == (0.0,)
    with pytest.raises(InvalidGeometryError):
        angle_set(0)


def test_single_pixel_single_view():
    matrix = build_system_matrix(1, (0.0,))
    assert matrix.dense().tolist() == [[1.0]]


def test_two_by_two_vertical_rays():
    matrix = build_system_matrix(2, (0.0,))
    assert matrix.dense().tolist() == [
        [1.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 1.0],
    ]
    assert np.allclose(matrix.dense().sum(axis=1), 2.0)


def test_horizontal_rays_are_transposed_vertical_rays():
    vertical = build_system_matrix(2, (0.0,)).dense()
    horizontal = build_system_matrix(2, (90.0,)).dense()
    transposed = vertical.reshape(2, 2, 2).transpose(0, 2, 1).reshape(2, 4)
    assert np.array_equal(horizontal, transposed)


@pytest.mark.parametrize("side", [2, 3, 4, 8])
def test_weights_are_positive_chords(side):
    matrix = build_system_matrix(side, angle_set(7))
    assert matrix.matrix.data.min() > 0
    assert matrix.matrix.data.max() <= np.sqrt(2) + 1e-12
    assert matrix.rows == 7 * side
    assert matrix.cols == side * side


def test_diagonal_ray_length():
    # each ray passes 0.5 from the centre: chord 2 sqrt(2) - 1 through the 2 x 2 square
    matrix = build_system_matrix(2, (45.0,))
    chords = matrix.dense().sum(axis=1)
    assert chords == pytest.approx([2 * np.sqrt(2) - 1] * 2, rel=1e-12)


@pytest.mark.parametrize("side, views", [(1, 1), (3, 5), (8, 8), (16, 3)])
def test_matrix_is_deterministic(side, views):
    first = build_system_matrix(side, angle_set(views))
    second = build_system_matrix(side, angle_set(views))
    assert first == second
    assert np.array_equal(first.matrix.indptr, second.matrix.indptr)
    assert np.array_equal(first.matrix.indices, second.matrix.indices)
    assert np.array_equal(first.matrix.data, second.matrix.data)


def test_view_rows_block():
    matrix = build_system_matrix(4, angle_set(3))
    block = matrix.view_rows(1)
    assert block.shape == (4, 16)
    assert np.array_equal(block.toarray(), matrix.dense()[4:8])
    assert matrix.n_views == 3 and matrix.n_bins == 4


def test_invalid_side():
    with pytest.raises(InvalidGeometryError):
        build_system_matrix(0, (0.0,))
    with pytest.raises(InvalidGeometryError):
        build_system_matrix(4, ())
