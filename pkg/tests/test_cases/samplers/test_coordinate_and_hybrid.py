"""
Integer coordinate descent and the hybrid integer solver.
"""

import numpy as np
import pytest
import scipy.sparse as sp

from tomoqa.forward import angle_set, build_system_matrix, project
from tomoqa.imaging import InvalidValueError, generate_phantom, render_digit
from tomoqa.noise import apply_noise
from tomoqa.qubo import import_qubo
from tomoqa.samplers import (
    ConstrainedQuadraticModel,
    HybridSettings,
    coordinate_descent,
    coordinate_descent_sweep,
    hybrid_cqm_solve,
    solve_cqm,
)
from tomoqa.samplers.lib.selection import improvement_potential, select_subproblem
from tomoqa.types import DimensionMismatchError


def _objective(matrix, y, x):
    r = matrix @ np.asarray(x, dtype=float) - y
    return float(r @ r)


def test_sweep_closed_form():
    assert coordinate_descent_sweep(np.array([[2.0]]), [6.0], [0], (0, 15)).tolist() == [3]


def test_sweep_tie_breaks_low():
    assert coordinate_descent_sweep(np.array([[2.0]]), [7.0], [0], (0, 15)).tolist() == [3]


def test_sweep_clips_to_bounds():
    assert coordinate_descent_sweep(np.array([[1.0]]), [40.0], [0], (0, 15)).tolist() == [15]
    assert coordinate_descent_sweep(np.array([[1.0]]), [-4.0], [5], (0, 15)).tolist() == [0]


def test_sweep_fixed_point():
    matrix = np.array([[1.0, 0.5], [0.0, 1.0]])
    y = np.array([3.0, 2.0])
    x = coordinate_descent(matrix, y, [0, 0], (0, 15))
    assert np.array_equal(coordinate_descent_sweep(matrix, y, x, (0, 15)), x)


def test_zero_column_is_left_unchanged():
    matrix = np.array([[1.0, 0.0], [1.0, 0.0]])
    out = coordinate_descent_sweep(matrix, [2.0, 2.0], [0, 7], (0, 15))
    assert out.tolist() == [2, 7]


def test_sweep_never_increases_objective(rng):
    for _ in range(50):
        matrix = rng.random((6, 5))
        y = rng.random(6) * 10
        x = rng.integers(0, 8, size=5)
        after = coordinate_descent_sweep(matrix, y, x, (0, 7))
        assert _objective(matrix, y, after) <= _objective(matrix, y, x) + 1e-12
        assert after.min() >= 0 and after.max() <= 7


def test_sweep_dimension_check():
    with pytest.raises(DimensionMismatchError):
        coordinate_descent_sweep(np.eye(2), [1.0, 1.0], [0, 0, 0], (0, 1))


def test_improvement_potential_and_selection(rng):
    gram = sp.identity(3, format="csr")
    gradient = np.array([0.0, 3.0, 1.0])
    x = np.zeros(3, dtype=np.int64)
    potential = improvement_potential(gram, gradient, x, np.zeros(3, dtype=int), np.full(3, 15))
    assert potential[0] == 0.0
    assert potential[1] > potential[2] > 0
    assert select_subproblem(potential, gradient, 2, rng).tolist() == [1, 2]


def test_hybrid_identity_exact_recovery():
    y = np.array([3.0, 0.0, 15.0, 7.0])
    result = hybrid_cqm_solve(np.eye(4), y, 4, time_limit=5.0, seed=1)
    assert result.x.tolist() == [3, 0, 15, 7]
    assert result.energy == 0.0
    assert result.converged
    assert result.wall_time < 5.0


def test_hybrid_invariants_on_phantom():
    truth = generate_phantom("shepp_logan", 4)
    matrix = build_system_matrix(4, angle_set(2))
    y = project(matrix, truth)
    result = hybrid_cqm_solve(matrix, y, 4, seed=3, iterations=15)
    assert result.x.min() >= 0 and result.x.max() <= 15
    assert result.energy == pytest.approx(_objective(matrix.dense(), y.values, result.x), abs=1e-9)
    assert all(b <= a for a, b in zip(result.energy_trace, result.energy_trace[1:]))
    assert len(result.energy_trace) == result.iterations


def test_hybrid_returned_point_matches_its_energy():
    # the single pixel stalls at 3 and every block move is rejected
    for seed in range(20):
        for iterations in (1, 2, 3):
            result = hybrid_cqm_solve(np.array([[1.0]]), [3.4], 4, seed=seed, iterations=iterations)
            assert result.x.tolist() == [3]
            assert result.energy == pytest.approx(_objective(np.array([[1.0]]), [3.4], result.x), abs=1e-12)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_hybrid_invariants_on_noisy_digit(seed):
    truth = render_digit(seed + 3)
    matrix = build_system_matrix(8, angle_set(8))
    y = apply_noise(truth, matrix, seed=seed)
    settings = HybridSettings(subproblem_size=8, sub_reads=5, sub_sweeps=50)
    result = hybrid_cqm_solve(matrix, y, 4, seed=seed, iterations=10, settings=settings)
    assert result.x.min() >= 0 and result.x.max() <= 15
    assert result.energy == pytest.approx(_objective(matrix.dense(), y.values, result.x), abs=1e-9)
    assert result.energy == result.energy_trace[-1]
    assert all(b <= a for a, b in zip(result.energy_trace, result.energy_trace[1:]))


def test_hybrid_iteration_budget_is_deterministic():
    truth = generate_phantom("foam", 8)
    matrix = build_system_matrix(8, angle_set(3))
    y = project(matrix, truth)
    settings = HybridSettings(subproblem_size=6, sub_reads=5, sub_sweeps=50)
    first = hybrid_cqm_solve(matrix, y, 1, seed=5, iterations=5, settings=settings)
    second = hybrid_cqm_solve(matrix, y, 1, seed=5, iterations=5, settings=settings)
    assert np.array_equal(first.x, second.x)
    assert first.energy_trace == second.energy_trace


def test_hybrid_reports_iterations_and_exports_subproblems(tmp_path):
    seen = []
    settings = HybridSettings(debug_dir=tmp_path / "subqubos")
    result = hybrid_cqm_solve(
        np.eye(2), [0.5, 0.5], 1, seed=0, iterations=3, settings=settings,
        on_iteration=lambda i, e: seen.append((i, e)),
    )
    assert [i for i, _ in seen] == [1, 2, 3]
    assert not result.converged
    assert result.energy == pytest.approx(0.5)
    files = sorted(p.name for p in (tmp_path / "subqubos").iterdir())
    assert files == ["subqubo_00001.txt", "subqubo_00002.txt", "subqubo_00003.txt"]
    assert import_qubo(tmp_path / "subqubos" / files[0]).n == 2


def test_constrained_model():
    cqm = ConstrainedQuadraticModel(matrix=np.eye(2), y=[1.0, 2.0], upper=3)
    assert cqm.objective([1, 2]) == 0.0
    assert cqm.is_feasible([0, 3])
    assert not cqm.is_feasible([0, 4])
    assert not cqm.is_feasible([0.5, 1])
    result = solve_cqm(cqm, 2, iterations=2, seed=0)
    assert result.x.tolist() == [1, 2]


def test_hybrid_argument_checks():
    with pytest.raises(InvalidValueError):
        hybrid_cqm_solve(np.eye(2), [1.0, 1.0], 0)
    with pytest.raises(InvalidValueError):
        hybrid_cqm_solve(np.eye(2), [1.0, 1.0], 1, time_limit=0.0)
    with pytest.raises(InvalidValueError):
        hybrid_cqm_solve(np.eye(2), [1.0, 1.0], 1, iterations=0)
    with pytest.raises(DimensionMismatchError):
        hybrid_cqm_solve(np.eye(2), [1.0, 1.0, 1.0], 1)
