"""Fastest-descent paths on a grid, cross-checked against the analytic cycloid.

The solver discretizes heights and controls on uniform grids, assumes a
straight path within each horizontal interval, and finds the time-optimal
control sequence by backward induction.  The cycloid module computes the
exact continuous optimum through the same endpoints for comparison.
"""

from .cycloid import (
    CycloidParams,
    descent_time_quadrature,
    optimal_time,
    sample_profile,
    solve_params,
    u_from_y_profile,
    y_at_x,
)
from .errors import (
    InfeasibleRolloutError,
    InfeasibleSegmentError,
    NegativeEnergyError,
    NoBracketError,
    NoFeasiblePathError,
    OutOfRangeError,
)
from .grid import (
    GridSpec,
    ProblemSpec,
    default_grid,
    is_admissible,
    u_index,
    u_value,
    x_index,
    x_value,
    y_index,
    y_value,
)
from .physics import INFEASIBLE, SegmentTime, segment_time, segment_time_quadrature, speed_at
from .report import ComparisonReport, RunConfig, run_convergence, run_solve, run_verification
from .solver import (
    SolveResult,
    evaluate_u_profile,
    extract_u_profile,
    extract_y_profile,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "CycloidParams",
    "ComparisonReport",
    "GridSpec",
    "INFEASIBLE",
    "InfeasibleRolloutError",
    "InfeasibleSegmentError",
    "NegativeEnergyError",
    "NoBracketError",
    "NoFeasiblePathError",
    "OutOfRangeError",
    "ProblemSpec",
    "RunConfig",
    "SegmentTime",
    "SolveResult",
    "default_grid",
    "descent_time_quadrature",
    "evaluate_u_profile",
    "extract_u_profile",
    "extract_y_profile",
    "is_admissible",
    "optimal_time",
    "run_convergence",
    "run_solve",
    "run_verification",
    "sample_profile",
    "segment_time",
    "segment_time_quadrature",
    "solve",
    "solve_params",
    "speed_at",
    "u_from_y_profile",
    "u_index",
    "u_value",
    "x_index",
    "x_value",
    "y_at_x",
    "y_index",
    "y_value",
]
