"""Travel time of a mass point across one straight segment.

A particle released at rest at height 0 moves with speed v = sqrt(-2*g*y),
so the time across a straight segment of width dx and drop u starting at
height y is the integral of ds/v along the segment:

    t = sqrt(2/g) * sqrt(dx^2 + u^2) / u * (sqrt(-y) - sqrt(-(u + y)))

with the limit t = dx / sqrt(-2*g*y) for a horizontal segment (u = 0).
A segment is infeasible when any part of it lies above the zero-speed
datum, or when it starts at the datum with no drop.

``segment_time_quadrature`` integrates ds/v numerically with the composite
midpoint rule and serves as an independent cross-check of the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .errors import InfeasibleSegmentError, NegativeEnergyError

_CHUNK = 1 << 20  # bounds quadrature memory at ~8 MB per work array


@total_ordering
@dataclass(frozen=True)
class SegmentTime:
    """Time to traverse one segment: finite positive seconds, or infeasible.

    Infeasible compares greater than every finite time, and addition
    saturates (infeasible + anything = infeasible), so minimizing over
    candidate controls never needs special cases.
    """

    seconds: float | None

    def __post_init__(self):
        if self.seconds is not None and not (0.0 < self.seconds < math.inf):
            raise ValueError(f"finite segment time must be positive, got {self.seconds}")

    @property
    def is_finite(self) -> bool:
        return self.seconds is not None

    def __lt__(self, other: "SegmentTime") -> bool:
        if not isinstance(other, SegmentTime):
            return NotImplemented
        if self.seconds is None:
            return False
        if other.seconds is None:
            return True
        return self.seconds < other.seconds

    def __add__(self, other: "SegmentTime | float") -> "SegmentTime":
        rhs = other.seconds if isinstance(other, SegmentTime) else float(other)
        if self.seconds is None or rhs is None or math.isinf(rhs):
            return INFEASIBLE
        return SegmentTime(self.seconds + rhs)

    __radd__ = __add__


INFEASIBLE = SegmentTime(None)


def speed_at(y: float, g: float) -> float:
    """Speed at height y of a particle released at rest at height 0."""
    if y > 0:
        raise NegativeEnergyError(f"height {y} is above the zero-speed datum")
    return math.sqrt(-2.0 * g * y)


def _infeasible(y: float, u: float) -> bool:
    return y > 0 or y + u > 0 or (y == 0 and u == 0)


def segment_time(y: float, u: float, dx: float, g: float) -> SegmentTime:
    """Closed-form travel time across one straight segment.

    Parameters
    ----------
    y : start height (m), measured from the zero-speed datum.
    u : vertical drop over the segment (m); negative goes down.
    dx : horizontal width of the segment (m), > 0.
    g : gravitational acceleration (m/s^2), > 0.
    """
    if not (dx > 0 and g > 0):
        raise ValueError(f"need dx > 0 and g > 0, got dx={dx}, g={g}")
    if _infeasible(y, u):
        return INFEASIBLE
    if u == 0:
        return SegmentTime(dx / math.sqrt(-2.0 * g * y))
    s = math.hypot(dx, u)
    # (s/u) * (sqrt(-y) - sqrt(-(u+y))) with the root difference rationalized,
    # which avoids cancellation for small |u|
    return SegmentTime(math.sqrt(2.0 / g) * s / (math.sqrt(-y) + math.sqrt(-(u + y))))


def segment_time_quadrature(y: float, u: float, dx: float, g: float, steps: int) -> float:
    """Composite-midpoint integral of ds/v along the segment.

    Converges to ``segment_time`` as steps grows; midpoint sampling never
    evaluates the integrand at the segment ends, so segments that start or
    end exactly at the datum (an integrable inverse-square-root singularity)
    still work, just with O(1/sqrt(steps)) instead of O(1/steps^2) error.
    """
    if not (dx > 0 and g > 0):
        raise ValueError(f"need dx > 0 and g > 0, got dx={dx}, g={g}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if _infeasible(y, u):
        raise InfeasibleSegmentError(f"segment from y={y} with drop u={u} is infeasible")
    slope_len = math.sqrt(1.0 + (u / dx) ** 2)
    h = dx / steps
    drop_per_step = h * u / dx  # height change across one step
    total = 0.0
    done = 0
    while done < steps:
        n = min(_CHUNK, steps - done)
        # in-place pipeline: midpoint index -> height -> speed^2 -> 1/speed
        work = np.arange(done, done + n, dtype=np.float64)
        work += 0.5
        work *= drop_per_step
        work += y
        work *= -2.0 * g
        np.sqrt(work, out=work)
        np.reciprocal(work, out=work)
        total += float(np.sum(work))
        done += n
    return slope_len * h * total
