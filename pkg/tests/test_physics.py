import math

import numpy as np
import pytest

from brachistochrone import (
    INFEASIBLE,
    InfeasibleSegmentError,
    NegativeEnergyError,
    SegmentTime,
    segment_time,
    segment_time_quadrature,
    speed_at,
)

G = 9.81


def test_speed_examples():
    assert speed_at(0.0, G) == 0.0
    v = speed_at(-5.0, G)
    assert math.isclose(v, 9.904544411531507, rel_tol=1e-14)
    assert math.isclose(v * v, 2 * G * 5, rel_tol=1e-14)  # squares back to the energy balance
    assert math.isclose(speed_at(-0.5, G), 3.132091952673165, rel_tol=1e-14)


def test_speed_raises_above_datum():
    with pytest.raises(NegativeEnergyError):
        speed_at(0.01, G)


@pytest.mark.parametrize(
    "y,u",
    [
        (0.0, 0.0),     # resting at the datum with no drop
        (0.5, -1.0),    # starts above the datum
        (-1.0, 1.5),    # ends above the datum
    ],
)
def test_segment_infeasible_cases(y, u):
    assert segment_time(y, u, 0.25, G) is INFEASIBLE


def test_horizontal_segment():
    t = segment_time(-5.0, 0.0, 0.25, G)
    assert t.is_finite
    assert math.isclose(t.seconds, 0.02524093886730761, rel_tol=1e-14)
    assert math.isclose(t.seconds, 0.25 / speed_at(-5.0, G), rel_tol=1e-15)
    assert math.isclose(t.seconds, 0.0252409, rel_tol=1e-5)


def test_sloped_segments():
    t1 = segment_time(0.0, -0.5, 0.25, G)
    assert math.isclose(t1.seconds, 0.35696078073176607, rel_tol=1e-14)
    assert abs(t1.seconds - 0.356965) < 5e-6
    t2 = segment_time(0.0, -5.0, 10.0, G)
    assert math.isclose(t2.seconds, 2.2576182049286544, rel_tol=1e-14)
    assert abs(t2.seconds - 2.257618) < 5e-7


def test_upward_segment_is_finite():
    # climbing is allowed while the path stays below the datum
    t = segment_time(-2.0, 1.0, 0.25, G)
    assert t.is_finite and t.seconds > 0


def test_quadrature_single_step_exact_for_constant_integrand():
    q = segment_time_quadrature(-5.0, 0.0, 0.25, G, steps=1)
    t = segment_time(-5.0, 0.0, 0.25, G).seconds
    assert math.isclose(q, t, rel_tol=1e-15)


def test_quadrature_converges_on_datum_start():
    # the integrand has an inverse-square-root singularity at the left end,
    # so midpoint converges like 1/sqrt(steps): about 3e-4 relative at 1e6
    t = segment_time(0.0, -0.5, 0.25, G).seconds
    q6 = segment_time_quadrature(0.0, -0.5, 0.25, G, steps=10**6)
    assert math.isclose(q6, 0.3568528181857599, rel_tol=1e-12)  # frozen oracle run
    assert abs(q6 - t) / t < 5e-4
    q7 = segment_time_quadrature(0.0, -0.5, 0.25, G, steps=10**7)
    assert abs(q7 - t) < abs(q6 - t) / 2
    assert abs(q7 - t) / t < 1e-4


def test_quadrature_datum_start_family_at_fine_steps():
    for u in (-0.1, -0.5, -1.0, -2.5, -5.0):
        t = segment_time(0.0, u, 0.25, G).seconds
        q = segment_time_quadrature(0.0, u, 0.25, G, steps=10**7)
        assert abs(q - t) / t <= 1e-4, f"u={u}: rel diff {abs(q - t) / t:.3e}"


def test_quadrature_tight_on_smooth_segment():
    t = segment_time(-1.0, -1.0, 0.25, G).seconds
    q = segment_time_quadrature(-1.0, -1.0, 0.25, G, steps=10**6)
    assert abs(q - t) / t <= 1e-8


def test_quadrature_rejects_infeasible():
    with pytest.raises(InfeasibleSegmentError):
        segment_time_quadrature(0.0, 0.0, 0.25, G, steps=100)
    with pytest.raises(ValueError):
        segment_time_quadrature(-1.0, 0.0, 0.25, G, steps=0)


def test_oracle_agreement_on_random_segments():
    rng = np.random.default_rng(7)
    for _ in range(50):
        y = rng.uniform(-10.0, -1e-3)
        u = rng.uniform(-5.0, -1e-3 - y)
        t = segment_time(y, u, 0.25, G).seconds
        q = segment_time_quadrature(y, u, 0.25, G, steps=10**5)
        assert abs(q - t) / t <= 1e-6, f"(y={y}, u={u}): rel diff {abs(q - t) / t:.3e}"


def test_positive_times_over_the_default_grid():
    for i in range(101):
        y = -10.0 + 0.1 * i
        for j in range(0, 101, 7):
            u = -5.0 + 0.1 * j
            t = segment_time(y, u, 0.25, G)
            if t.is_finite:
                assert t.seconds > 0.0


def test_horizontal_time_decreases_with_depth():
    times = [segment_time(y, 0.0, 0.25, G).seconds for y in (-0.1, -0.5, -1, -2, -5, -10)]
    assert all(a > b for a, b in zip(times, times[1:]))


def test_straight_path_split_in_half_adds_up():
    rng = np.random.default_rng(11)
    cases = [(-1.0, -1.0, 0.25), (0.0, -2.0, 1.0), (-3.0, 2.0, 0.5), (-4.0, 0.0, 0.25)]
    cases += [
        (rng.uniform(-9, -0.1), 0.0, rng.uniform(0.05, 2.0))
        for _ in range(5)
    ]
    cases += [
        (y := rng.uniform(-9, -0.1), rng.uniform(-4, -y - 0.01), rng.uniform(0.05, 2.0))
        for _ in range(20)
    ]
    for y, u, dx in cases:
        whole = segment_time(y, u, dx, G).seconds
        first = segment_time(y, u / 2, dx / 2, G).seconds
        second = segment_time(y + u / 2, u / 2, dx / 2, G).seconds
        assert abs(first + second - whole) / whole <= 1e-12, (y, u, dx)


def test_segment_time_ordering_and_saturation():
    fast = SegmentTime(1.0)
    slow = SegmentTime(2.0)
    assert fast < slow < INFEASIBLE
    assert not INFEASIBLE < fast
    assert min(INFEASIBLE, slow, fast) == fast
    assert (fast + 1.5).seconds == 2.5
    assert (fast + slow).seconds == 3.0
    assert not (fast + INFEASIBLE).is_finite
    assert not (INFEASIBLE + 1.0).is_finite
    assert not INFEASIBLE.is_finite


def test_segment_time_rejects_nonpositive_values():
    with pytest.raises(ValueError):
        SegmentTime(0.0)
    with pytest.raises(ValueError):
        SegmentTime(-1.0)
    with pytest.raises(ValueError):
        SegmentTime(math.inf)


def test_contract_violations_raise():
    with pytest.raises(ValueError):
        segment_time(-1.0, 0.0, 0.0, G)
    with pytest.raises(ValueError):
        segment_time(-1.0, 0.0, 0.25, -9.81)
