"""
Subproblem selection for the hybrid solver.

The potential of a coordinate is the largest objective drop it can take
part in from the current point: either moving it alone to its integer
optimum, or a +-1 step together with one coupled coordinate. With
g = M^T r, c = diag(M^T M) and G = M^T M, a joint step (d_i, d_j) lowers
the objective by 2 (d_i g_i + d_j g_j) - d_i^2 c_i - d_j^2 c_j - 2 d_i d_j G_ij.
"""

import numpy as np
import scipy.sparse as sp


def improvement_potential(
    gram: sp.csr_matrix,
    gradient: np.ndarray,
    x: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
) -> np.ndarray:
    """
    Per-coordinate best achievable drop (single move or coupled +-1 pair).

    Args:
        gram: M^T M
        gradient: M^T (y - Mx)
        x: Current integer point
        lower, upper: Per-coordinate bounds
    """
    curvature = gram.diagonal()
    potential = np.zeros(x.size)

    active = curvature > 0
    step = np.zeros(x.size)
    step[active] = gradient[active] / curvature[active]
    target = np.clip(np.ceil(x + step - 0.5), lower, upper) - x
    single = 2.0 * target * gradient - target * target * curvature
    potential[active] = np.maximum(single[active], 0.0)

    upper_pairs = sp.triu(gram, k=1).tocoo()
    i, j, g_ij = upper_pairs.row, upper_pairs.col, upper_pairs.data
    if i.size == 0:
        return potential

    best_pair = np.full(i.size, -np.inf)
    for d_i in (-1, 1):
        for d_j in (-1, 1):
            feasible = (
                (x[i] + d_i >= lower[i]) & (x[i] + d_i <= upper[i])
                & (x[j] + d_j >= lower[j]) & (x[j] + d_j <= upper[j])
            )
            drop = (
                2.0 * (d_i * gradient[i] + d_j * gradient[j])
                - curvature[i] - curvature[j] - 2.0 * d_i * d_j * g_ij
            )
            best_pair = np.where(feasible, np.maximum(best_pair, drop), best_pair)

    best_pair = np.maximum(best_pair, 0.0)
    np.maximum.at(potential, i, best_pair)
    np.maximum.at(potential, j, best_pair)
    return potential


def select_subproblem(
    potential: np.ndarray, gradient: np.ndarray, k: int, rng: np.random.Generator
) -> np.ndarray:
    """
    Indices of the k coordinates with the largest potential.

    Ties break by larger |gradient|, then by a seeded random key. The
    result is sorted ascending.
    """
    k = min(k, potential.size)
    keys = rng.random(potential.size)
    order = np.lexsort((keys, -np.abs(gradient), -potential))
    return np.sort(order[:k])
