"""Reference values for the standard benchmark instance (a, b) = (10, -5).

The cycloid constants and the 41 station heights come from an independent
high-precision computation of the analytic optimum; the solver time is a
regression golden recorded from a verified run of this package at the
default 41 x 101 grid.
"""

BENCHMARK_A = 10.0
BENCHMARK_B = -5.0
BENCHMARK_G = 9.81

# analytic arc through (0,0) and (10,-5): radius and terminal roll angle
THETA_MAX = 3.50837
RADIUS = 2.586

# descent time along the arc at g = 9.81
DESCENT_TIME = 1.8012954830137198

# arc heights at the 41 stations x = 0, 0.25, ..., 10 (rounded to 5 decimals)
STATION_HEIGHTS = (
    0.0, -0.86755, -1.34679, -1.73084, -2.05946,
    -2.34941, -2.60981, -2.84634, -3.06283, -3.26204,
    -3.44602, -3.61637, -3.77433, -3.92094, -4.05702,
    -4.18327, -4.30028, -4.40854, -4.50848, -4.60047,
    -4.68481, -4.76179, -4.83164, -4.89456, -4.95074,
    -5.00031, -5.04342, -5.08018, -5.11067, -5.13497,
    -5.15315, -5.16523, -5.17125, -5.17123, -5.16517,
    -5.15304, -5.13483, -5.11049, -5.07995, -5.04316, -5.0,
)

# regression golden: solver total time on the default 41 x 101 grid
SOLVER_TIME_41_101 = 1.810851730822932
