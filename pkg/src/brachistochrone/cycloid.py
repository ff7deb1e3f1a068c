"""Analytic fastest-descent curve through (0, 0) and (a, b).

The optimum is a cycloid arc x = r*(theta - sin theta), y = -r*(1 - cos theta)
starting vertically at the origin.  The radius r and terminal roll angle
theta_max follow from the endpoint condition

    (1 - cos theta) / (theta - sin theta) = -b / a,

whose left side decreases strictly on (0, 2*pi), so plain bisection finds
theta_max without derivatives.  The descent time along the arc is
sqrt(r/g) * theta_max; ``descent_time_quadrature`` checks that value by
summing chord lengths over speeds along a dense sampling of the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoBracketError, OutOfRangeError
from .grid import GridSpec

_THETA_EPS = 1e-9  # keeps the shape equation away from its removable 0/0
_MAX_BISECT = 80


@dataclass(frozen=True)
class CycloidParams:
    """Rolling-circle radius and terminal roll angle of the optimal arc."""

    r: float
    theta_max: float

    def __post_init__(self):
        if not (self.r > 0):
            raise ValueError(f"radius must be positive, got {self.r}")
        if not (0.0 < self.theta_max < 2.0 * math.pi):
            raise ValueError(f"theta_max must lie in (0, 2*pi), got {self.theta_max}")

    @property
    def x_max(self) -> float:
        return self.r * (self.theta_max - math.sin(self.theta_max))


def _height_ratio(theta: float) -> float:
    # (1 - cos t)/(t - sin t); below 1e-3 both terms underflow in doubles,
    # so switch to the leading series terms (ratio ~ 3/t there)
    if theta < 1e-3:
        return (3.0 / theta) * (1.0 - theta * theta / 12.0) / (1.0 - theta * theta / 20.0)
    return (1.0 - math.cos(theta)) / (theta - math.sin(theta))


def solve_params(a: float, b: float, tol: float = 1e-9) -> CycloidParams:
    """Fit the cycloid through (0, 0) and (a, b).

    ``tol`` bounds the relative residual of both endpoint conditions;
    must lie in (0, 1e-3].
    """
    if not (a > 0 and b < 0):
        raise ValueError(f"need a > 0 and b < 0, got a={a}, b={b}")
    if not (0.0 < tol <= 1e-3):
        raise ValueError(f"tol must lie in (0, 1e-3], got {tol}")
    target = -b / a
    lo, hi = _THETA_EPS, 2.0 * math.pi - _THETA_EPS
    if not (_height_ratio(lo) > target > _height_ratio(hi)):
        raise NoBracketError(f"cannot bracket the shape equation for -b/a = {target}")
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if _height_ratio(mid) > target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    theta = 0.5 * (lo + hi)
    r = -b / (1.0 - math.cos(theta))
    if abs(r * (theta - math.sin(theta)) - a) > tol * a or abs(r * (1.0 - math.cos(theta)) + b) > tol * (-b):
        raise NoBracketError(f"bisection failed to meet tolerance {tol} for (a, b) = ({a}, {b})")
    return CycloidParams(r=r, theta_max=theta)


def y_at_x(params: CycloidParams, x: float) -> float:
    """Height of the arc at horizontal position x (0 <= x <= arc end).

    Inverts x = r*(theta - sin theta), which increases strictly in theta,
    by bisection to 1e-12.
    """
    x_max = params.x_max
    slack = 1e-9 * max(1.0, x_max)
    if x < -slack or x > x_max + slack:
        raise OutOfRangeError(f"x={x} outside the arc span [0, {x_max}]")
    x = min(max(x, 0.0), x_max)
    r = params.r
    lo, hi = 0.0, params.theta_max
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if r * (mid - math.sin(mid)) < x:
            lo = mid
        else:
            hi = mid
    theta = 0.5 * (lo + hi)
    return -r * (1.0 - math.cos(theta)) + 0.0  # +0.0 folds -0.0 into 0.0


def sample_profile(params: CycloidParams, grid: GridSpec) -> np.ndarray:
    """Arc heights at the grid stations x_k = k*dx, k = 0 .. n_x-1.

    These generally fall between height-grid points; they serve as the
    reference the grid solution is compared against.
    """
    return np.array([y_at_x(params, k * grid.dx) for k in range(grid.n_x)])


def u_from_y_profile(y: np.ndarray) -> np.ndarray:
    """Consecutive height differences: the control sequence tracing a profile."""
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.size < 2:
        raise ValueError(f"need a 1-D profile with at least 2 heights, got shape {y.shape}")
    return np.diff(y)


def optimal_time(params: CycloidParams, g: float) -> float:
    """Descent time along the arc: sqrt(r/g) * theta_max."""
    if not (g > 0):
        raise ValueError(f"g must be positive, got {g}")
    return math.sqrt(params.r / g) * params.theta_max


def descent_time_quadrature(params: CycloidParams, g: float, samples: int = 200_000) -> float:
    """Descent time from chord lengths over midpoint speeds along the arc.

    Uses only sampled positions and the speed law, so it cross-checks
    ``optimal_time`` through an unrelated route.
    """
    if not (g > 0):
        raise ValueError(f"g must be positive, got {g}")
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    thetas = np.linspace(0.0, params.theta_max, samples + 1)
    xs = params.r * (thetas - np.sin(thetas))
    ys = -params.r * (1.0 - np.cos(thetas))
    ds = np.hypot(np.diff(xs), np.diff(ys))
    depth_mid = -0.5 * (ys[:-1] + ys[1:])
    return float(np.sum(ds / np.sqrt(2.0 * g * depth_mid)))
