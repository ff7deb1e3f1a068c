import math

import numpy as np
import pytest

from brachistochrone import (
    CycloidParams,
    GridSpec,
    NoBracketError,
    OutOfRangeError,
    descent_time_quadrature,
    evaluate_u_profile,
    optimal_time,
    sample_profile,
    solve_params,
    u_from_y_profile,
    y_at_x,
)
from reference_data import REFERENCE_HEIGHTS


def test_benchmark_parameters(benchmark_params):
    assert abs(benchmark_params.theta_max - 3.50837) <= 1e-4
    assert abs(benchmark_params.r - 2.586) <= 1e-3


def test_plug_back_residuals(benchmark_params):
    r, th = benchmark_params.r, benchmark_params.theta_max
    assert abs(r * (th - math.sin(th)) - 10.0) <= 1e-6
    assert abs(-r * (1.0 - math.cos(th)) + 5.0) <= 1e-6


@pytest.mark.parametrize("r0", [0.5, 1.0, 2.586])
def test_half_arch_instances(r0):
    # lowest point of the rolling circle: x spans pi*r0, y drops 2*r0
    p = solve_params(math.pi * r0, -2.0 * r0)
    assert abs(p.theta_max - math.pi) <= 1e-9
    assert abs(p.r - r0) <= 1e-9 * r0


def test_solve_params_validation():
    with pytest.raises(ValueError):
        solve_params(-1.0, -5.0)
    with pytest.raises(ValueError):
        solve_params(10.0, 0.0)
    with pytest.raises(ValueError):
        solve_params(10.0, -5.0, tol=0.0)
    with pytest.raises(ValueError):
        solve_params(10.0, -5.0, tol=1e-2)


def test_absurd_aspect_ratio_cannot_bracket():
    with pytest.raises(NoBracketError):
        solve_params(1.0, -4e9)


def test_params_validation():
    with pytest.raises(ValueError):
        CycloidParams(r=0.0, theta_max=1.0)
    with pytest.raises(ValueError):
        CycloidParams(r=1.0, theta_max=7.0)


def test_height_at_positions(benchmark_params):
    assert y_at_x(benchmark_params, 0.0) == 0.0
    assert abs(y_at_x(benchmark_params, 0.25) - (-0.86755)) <= 5e-5
    assert abs(y_at_x(benchmark_params, 10.0) - (-5.0)) <= 1e-6


def test_height_out_of_span(benchmark_params):
    with pytest.raises(OutOfRangeError):
        y_at_x(benchmark_params, -0.1)
    with pytest.raises(OutOfRangeError):
        y_at_x(benchmark_params, 10.2)
    # tiny overshoot within the tolerance clamps instead of raising
    assert y_at_x(benchmark_params, 10.0 + 1e-10) == pytest.approx(-5.0, abs=1e-6)


def test_horizontal_position_increases_with_angle(benchmark_params):
    r = benchmark_params.r
    thetas = np.linspace(1e-6, benchmark_params.theta_max, 1000)
    xs = r * (thetas - np.sin(thetas))
    assert np.all(np.diff(xs) > 0.0)


def test_station_table_reproduction(benchmark_params, benchmark_grid):
    heights = sample_profile(benchmark_params, benchmark_grid)
    dev = np.max(np.abs(heights - np.array(REFERENCE_HEIGHTS)))
    assert dev <= 5e-5, f"max station deviation {dev:.2e}"


def test_station_extremes(benchmark_params, benchmark_grid):
    heights = sample_profile(benchmark_params, benchmark_grid)
    assert heights[0] == 0.0
    assert abs(heights[32] - (-5.17125)) <= 5e-5  # lowest station: the arc dips below b
    assert np.argmin(heights) == 32
    assert abs(heights[-1] - (-5.0)) <= 1e-6


def test_sample_profile_two_stations(benchmark_spec, benchmark_params):
    grid = GridSpec.from_problem(benchmark_spec, n_x=2, n_y=101)
    heights = sample_profile(benchmark_params, grid)
    assert heights[0] == 0.0
    assert abs(heights[1] - (-5.0)) <= 1e-6


def test_controls_from_heights():
    np.testing.assert_allclose(u_from_y_profile([0.0, -5.0]), [-5.0])
    np.testing.assert_allclose(
        u_from_y_profile([0.0, -0.86755, -1.34679]),
        [-0.86755, -0.47924],
        atol=1e-12,
    )
    np.testing.assert_array_equal(u_from_y_profile([1.5, 1.5, 1.5]), [0.0, 0.0])
    with pytest.raises(ValueError):
        u_from_y_profile([1.0])


def test_descent_time_closed_form(benchmark_params):
    t = optimal_time(benchmark_params, 9.81)
    assert abs(t - 1.8013) <= 1e-3
    # half-arch instance has radius 1, so the time is pi/sqrt(g)
    p = solve_params(math.pi, -2.0)
    for g in (1.0, 9.81):
        assert math.isclose(optimal_time(p, g), math.pi / math.sqrt(g), rel_tol=1e-9)


def test_descent_time_scaling(benchmark_params):
    doubled = CycloidParams(r=2 * benchmark_params.r, theta_max=benchmark_params.theta_max)
    ratio = optimal_time(doubled, 9.81) / optimal_time(benchmark_params, 9.81)
    assert math.isclose(ratio, math.sqrt(2.0), rel_tol=1e-12)


def test_descent_time_matches_chord_quadrature(benchmark_params):
    t = optimal_time(benchmark_params, 9.81)
    q = descent_time_quadrature(benchmark_params, 9.81)
    assert abs(q - t) / t <= 1e-4
    q_fine = descent_time_quadrature(benchmark_params, 9.81, samples=1_000_000)
    assert abs(q_fine - t) < abs(q - t)


def test_boundary_interpolation_on_random_instances():
    rng = np.random.default_rng(23)
    for _ in range(50):
        a = rng.uniform(0.1, 50.0)
        b = -rng.uniform(0.05, 30.0)
        p = solve_params(a, b)
        assert abs(y_at_x(p, 0.0)) <= 1e-6
        assert abs(y_at_x(p, a) - b) <= 1e-6


def test_chord_path_cannot_beat_the_arc(
    benchmark_spec, benchmark_grid, benchmark_params
):
    heights = sample_profile(benchmark_params, benchmark_grid)
    t_chord = evaluate_u_profile(
        u_from_y_profile(heights), 0.0, benchmark_spec, benchmark_grid
    )
    assert t_chord >= optimal_time(benchmark_params, 9.81) - 1e-9
