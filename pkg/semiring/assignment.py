"""Maximum-weight perfect assignment over exact integer weights.

Weights are Python integers; `None` marks a forbidden edge. `scipy.optimize.linear_sum_assignment` is used while
every partial sum fits in the exactly representable range of float64; beyond it an exact integer Hungarian solver
takes over.
"""

import math

import numpy as np
from scipy.optimize import linear_sum_assignment

Weights = list[list[int | None]]

_FLOAT_EXACT_LIMIT = 2**52


def solve_assignment(weights: Weights) -> tuple[int, tuple[int, ...]] | None:
    """Find a maximum-weight perfect assignment of rows to columns.

    Args:
        weights: Square grid of integer weights, `None` for forbidden edges.

    Returns:
        tuple[int, tuple[int, ...]] | None: The optimal total weight and the column assigned to each row, or
            `None` if every perfect assignment uses a forbidden edge.
    """
    n = len(weights)
    finite = [w for row in weights for w in row if w is not None]
    if not finite:
        return None
    bound = max(abs(w) for w in finite) + 1
    if (2 * n + 1) * bound < _FLOAT_EXACT_LIMIT:
        columns = _solve_float(weights)
    else:
        columns = _solve_exact(weights, bound)
    if columns is None:
        return None
    return sum(weights[i][j] for i, j in enumerate(columns)), columns


def _solve_float(weights: Weights) -> tuple[int, ...] | None:
    profit = np.array(
        [[-np.inf if w is None else float(w) for w in row] for row in weights],
        dtype=np.float64,
    )
    try:
        rows, cols = linear_sum_assignment(profit, maximize=True)
    except ValueError:
        # scipy signals an infeasible cost matrix this way
        return None
    columns = tuple(int(c) for _, c in sorted(zip(rows, cols, strict=True)))
    if any(weights[i][j] is None for i, j in enumerate(columns)):
        return None
    return columns


def _solve_exact(weights: Weights, bound: int) -> tuple[int, ...] | None:
    """Shortest augmenting path Hungarian method on exact integers (minimizing the negated weights)."""
    n = len(weights)
    forbidden = 2 * n * bound + 1
    cost = [[forbidden if w is None else -w for w in row] for row in weights]

    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)  # match[j]: row (1-based) assigned to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [math.inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = math.inf
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    columns = [0] * n
    for j in range(1, n + 1):
        columns[match[j] - 1] = j - 1
    if any(weights[i][j] is None for i, j in enumerate(columns)):
        return None
    return tuple(columns)
