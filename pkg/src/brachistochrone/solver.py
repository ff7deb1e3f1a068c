"""Backward induction over the stage/height grid.

Stages are numbered 1 .. n_x-1 (stage k covers the interval from x_{k-1} to
x_k in 0-based x positions).  The cost-to-go at the final position is zero,
and the final stage only admits transitions that land on the target height,
so the terminal boundary condition is enforced purely through admissibility.

Within each stage the candidate controls are scanned in ascending order and
a candidate replaces the incumbent only on strict improvement, so ties
resolve to the smallest control deterministically.  Unreachable states keep
an infinite cost-to-go and a NaN policy entry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleRolloutError, InfeasibleSegmentError, NoFeasiblePathError
from .grid import GridSpec, ProblemSpec, u_value, y_index, y_value
from .physics import segment_time


@dataclass(frozen=True)
class SolveResult:
    """Optimal policy, per-position cost-to-go table, and total time.

    policy[k-1, i-1] is the control applied at stage k from the i-th height
    (NaN where no admissible continuation exists); values[p, i-1] is the
    cost-to-go from the i-th height at 0-based x position p, with the last
    row identically zero by the terminal convention.
    """

    policy: np.ndarray
    values: np.ndarray
    total_time: float


def segment_time_table(spec: ProblemSpec, grid: GridSpec) -> np.ndarray:
    """(n_y, n_u) matrix of stage times; +inf marks infeasible segments."""
    table = np.full((grid.n_y, grid.n_u), np.inf)
    for i in range(grid.n_y):
        y = y_value(i + 1, grid)
        for j in range(grid.n_u):
            t = segment_time(y, u_value(j + 1, grid), grid.dx, spec.g)
            if t.is_finite:
                table[i, j] = t.seconds
    return table


def _start_index(spec: ProblemSpec, grid: GridSpec) -> int:
    i = y_index(spec.y_start, grid)
    if abs(y_value(i, grid) - spec.y_start) > spec.tolerance:
        raise ValueError(f"y_start={spec.y_start} does not lie on the height grid")
    return i


def solve(spec: ProblemSpec, grid: GridSpec) -> SolveResult:
    """Compute the optimal policy and the minimal total descent time."""
    start = _start_index(spec, grid)
    ys = grid.y_min + grid.dy * np.arange(grid.n_y)
    us = grid.u_min + grid.dy * np.arange(grid.n_u)
    times = segment_time_table(spec, grid)

    succ_y = ys[:, None] + us[None, :]
    succ = np.rint((succ_y - grid.y_min) / grid.dy).astype(np.intp)
    in_range = (succ >= 0) & (succ < grid.n_y)
    interior_ok = in_range & (succ_y <= 0.0) & (succ_y >= grid.y_min)
    terminal_ok = in_range & (np.abs(succ_y - spec.b) < spec.tolerance)
    succ_safe = np.where(in_range, succ, 0)

    values = np.full((grid.n_x, grid.n_y), np.inf)
    values[grid.n_x - 1, :] = 0.0
    policy = np.full((grid.n_x - 1, grid.n_y), np.nan)

    for k in range(grid.n_x - 1, 0, -1):
        allowed = terminal_ok if k == grid.n_x - 1 else interior_ok
        cand = np.where(allowed, times + values[k, succ_safe], np.inf)
        best_j = np.argmin(cand, axis=1)  # first minimum: smallest control wins ties
        best = cand[np.arange(grid.n_y), best_j]
        values[k - 1] = best
        policy[k - 1] = np.where(np.isfinite(best), us[best_j], np.nan)

    total = float(values[0, start - 1])
    if not np.isfinite(total):
        raise NoFeasiblePathError(
            f"no admissible control sequence reaches b={spec.b} from y_start={spec.y_start}"
        )
    return SolveResult(policy=policy, values=values, total_time=total)


def extract_y_profile(policy: np.ndarray, spec: ProblemSpec, grid: GridSpec) -> np.ndarray:
    """Heights visited when the policy is rolled out from the start state."""
    y = spec.y_start
    heights = np.empty(grid.n_x)
    heights[0] = y
    for k in range(1, grid.n_x):
        u = policy[k - 1, y_index(y, grid) - 1]
        if not np.isfinite(u):
            raise InfeasibleRolloutError(f"no finite policy entry at stage {k}, y={y}")
        y = y + u
        heights[k] = y
    return heights


def extract_u_profile(policy: np.ndarray, spec: ProblemSpec, grid: GridSpec) -> np.ndarray:
    """Controls applied when the policy is rolled out from the start state."""
    y = spec.y_start
    controls = np.empty(grid.n_x - 1)
    for k in range(1, grid.n_x):
        u = policy[k - 1, y_index(y, grid) - 1]
        if not np.isfinite(u):
            raise InfeasibleRolloutError(f"no finite policy entry at stage {k}, y={y}")
        controls[k - 1] = u
        y = y + u
    return controls


def evaluate_u_profile(
    controls: np.ndarray, y_start: float, spec: ProblemSpec, grid: GridSpec
) -> float:
    """Total time along the trajectory induced by an arbitrary control sequence.

    The controls need not lie on the control grid; only the segment
    feasibility rules apply.  Raises InfeasibleSegmentError (carrying the
    1-based stage) on the first segment the particle cannot traverse.
    """
    controls = np.asarray(controls, dtype=np.float64)
    if controls.ndim != 1 or controls.size != grid.n_x - 1:
        raise ValueError(f"expected {grid.n_x - 1} controls, got shape {controls.shape}")
    y = float(y_start)
    total = 0.0
    for k, u in enumerate(controls, start=1):
        t = segment_time(y, float(u), grid.dx, spec.g)
        if not t.is_finite:
            raise InfeasibleSegmentError(
                f"stage {k}: segment from y={y} with drop u={u} is infeasible", stage=k
            )
        total += t.seconds
        y += u
    return total
