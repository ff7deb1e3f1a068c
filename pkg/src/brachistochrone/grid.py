"""Problem instance, uniform grids, and state admissibility.

The state is a height y <= 0 sampled on a uniform grid over [y_min, 0];
controls are vertical drops sampled with the same step so that applying an
on-grid control to an on-grid state lands on the grid again.  All indices
are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError


def grid_tolerance(b: float) -> float:
    """Relative slack used for range checks and terminal matching."""
    return 1e-9 * max(1.0, abs(b))


@dataclass(frozen=True)
class ProblemSpec:
    """Physical instance: descend from (0, y_start) to (a, b) under gravity g.

    Units are meters and m/s^2; requires a > 0, b < 0, g > 0.
    """

    a: float
    b: float
    g: float = 9.81
    y_start: float = 0.0

    def __post_init__(self):
        if not (self.a > 0):
            raise ValueError(f"a must be positive, got {self.a}")
        if not (self.b < 0):
            raise ValueError(f"b must be negative, got {self.b}")
        if not (self.g > 0):
            raise ValueError(f"g must be positive, got {self.g}")
        if self.y_start > 0:
            raise ValueError(f"y_start must be <= 0, got {self.y_start}")

    @property
    def tolerance(self) -> float:
        return grid_tolerance(self.b)


@dataclass(frozen=True)
class GridSpec:
    """Uniform discretization of the x axis, the height axis, and the controls.

    n_x x-samples with step dx span [0, a]; n_y height samples with step dy
    span [y_min, 0]; controls span [u_min, u_max] with the same step dy.
    Both grid bounds of the control range must lie on the dy lattice, which
    keeps every reachable state on the height grid.
    """

    n_x: int
    n_y: int
    dx: float
    dy: float
    y_min: float
    u_min: float
    u_max: float

    def __post_init__(self):
        if self.n_x < 2:
            raise ValueError(f"n_x must be >= 2, got {self.n_x}")
        if self.n_y < 3 or self.n_y % 2 == 0:
            raise ValueError(f"n_y must be odd and >= 3, got {self.n_y}")
        if not (self.dx > 0 and self.dy > 0):
            raise ValueError(f"grid steps must be positive, got dx={self.dx}, dy={self.dy}")
        if not (self.y_min < 0):
            raise ValueError(f"y_min must be negative, got {self.y_min}")
        if abs(self.y_min + (self.n_y - 1) * self.dy) > grid_tolerance(self.y_min):
            raise ValueError("height grid must span [y_min, 0] exactly")
        if not (self.u_min < self.u_max):
            raise ValueError(f"need u_min < u_max, got [{self.u_min}, {self.u_max}]")
        for name, bound in (("u_min", self.u_min), ("u_max", self.u_max)):
            if abs(bound / self.dy - round(bound / self.dy)) > 1e-9:
                raise ValueError(f"{name}={bound} is not a multiple of the grid step {self.dy}")

    @classmethod
    def from_problem(
        cls,
        spec: ProblemSpec,
        n_x: int,
        n_y: int,
        *,
        y_min: float | None = None,
        u_min: float | None = None,
        u_max: float | None = None,
    ) -> "GridSpec":
        """Build the grid for a problem instance.

        Defaults: the height grid floor sits at 2b and the control range is
        [b, -b], so with odd n_y both b and 0 are grid points.
        """
        if n_y < 3 or n_y % 2 == 0:
            raise ValueError(f"n_y must be odd and >= 3, got {n_y}")
        if n_x < 2:
            raise ValueError(f"n_x must be >= 2, got {n_x}")
        floor = 2.0 * spec.b if y_min is None else float(y_min)
        if floor >= spec.b:
            raise ValueError(f"y_min={floor} must lie below the target height b={spec.b}")
        dy = -floor / (n_y - 1)
        grid = cls(
            n_x=n_x,
            n_y=n_y,
            dx=spec.a / (n_x - 1),
            dy=dy,
            y_min=floor,
            u_min=spec.b if u_min is None else float(u_min),
            u_max=-spec.b if u_max is None else float(u_max),
        )
        # the target must be representable, or the terminal condition can
        # never be met exactly
        i_b = round((spec.b - floor) / dy)
        if abs(floor + i_b * dy - spec.b) > spec.tolerance:
            raise ValueError(
                f"target height b={spec.b} does not lie on the height grid "
                f"(floor {floor}, step {dy})"
            )
        return grid

    @property
    def n_u(self) -> int:
        """Number of control samples."""
        return round((self.u_max - self.u_min) / self.dy) + 1

    @property
    def x_max(self) -> float:
        return (self.n_x - 1) * self.dx

    @property
    def range_tol(self) -> float:
        # keyed to the target-height scale; y_min/2 is b under the default floor
        return grid_tolerance(self.y_min / 2.0)


def _affine_index(value: float, origin: float, step: float, count: int, axis: str) -> int:
    # nearest-integer rounding; exact halves round to even (never hit on the
    # default grids)
    idx = round(1.0 + (value - origin) / step)
    if idx < 1 or idx > count:
        raise OutOfRangeError(f"{axis}={value} maps outside [1, {count}]")
    return idx


def _check_range(value: float, lo: float, hi: float, tol: float, axis: str) -> None:
    if value < lo - tol or value > hi + tol:
        raise OutOfRangeError(f"{axis}={value} outside [{lo}, {hi}]")


def y_index(y: float, grid: GridSpec) -> int:
    """Nearest height-grid index (1-based) for a height in [y_min, 0]."""
    _check_range(y, grid.y_min, 0.0, grid.range_tol, "y")
    return _affine_index(y, grid.y_min, grid.dy, grid.n_y, "y")


def y_value(i: int, grid: GridSpec) -> float:
    """Height of the i-th grid point (1-based)."""
    if not 1 <= i <= grid.n_y:
        raise OutOfRangeError(f"height index {i} outside [1, {grid.n_y}]")
    return grid.y_min + (i - 1) * grid.dy


def u_index(u: float, grid: GridSpec) -> int:
    """Nearest control-grid index (1-based) for a control in [u_min, u_max]."""
    _check_range(u, grid.u_min, grid.u_max, grid.range_tol, "u")
    return _affine_index(u, grid.u_min, grid.dy, grid.n_u, "u")


def u_value(j: int, grid: GridSpec) -> float:
    """Control value of the j-th grid point (1-based)."""
    if not 1 <= j <= grid.n_u:
        raise OutOfRangeError(f"control index {j} outside [1, {grid.n_u}]")
    return grid.u_min + (j - 1) * grid.dy


def x_index(x: float, grid: GridSpec) -> int:
    """Nearest x-grid index (1-based) for a coordinate in [0, a]."""
    _check_range(x, 0.0, grid.x_max, grid.range_tol, "x")
    return _affine_index(x, 0.0, grid.dx, grid.n_x, "x")


def x_value(k: int, grid: GridSpec) -> float:
    """x coordinate of the k-th grid point (1-based)."""
    if not 1 <= k <= grid.n_x:
        raise OutOfRangeError(f"x index {k} outside [1, {grid.n_x}]")
    return (k - 1) * grid.dx


def is_admissible(y: float, k: int, grid: GridSpec, spec: ProblemSpec) -> bool:
    """Whether height y is an allowed state after applying the stage-k control.

    At the final stage (k = n_x - 1) only the target height b is allowed, to
    within the grid tolerance.  At interior stages the height must not rise
    above the start datum nor fall below the grid floor.
    """
    if not 1 <= k <= grid.n_x - 1:
        raise ValueError(f"stage {k} outside [1, {grid.n_x - 1}]")
    if k == grid.n_x - 1:
        return abs(y - spec.b) < spec.tolerance
    return grid.y_min <= y <= 0.0


def default_grid(spec: ProblemSpec) -> GridSpec:
    """The 41 x 101 grid used throughout the bundled experiments."""
    return GridSpec.from_problem(spec, n_x=41, n_y=101)
