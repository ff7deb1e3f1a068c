import pytest

from brachistochrone import GridSpec, ProblemSpec, solve, solve_params


@pytest.fixture(scope="session")
def benchmark_spec():
    return ProblemSpec(a=10.0, b=-5.0, g=9.81)


@pytest.fixture(scope="session")
def benchmark_grid(benchmark_spec):
    return GridSpec.from_problem(benchmark_spec, n_x=41, n_y=101)


@pytest.fixture(scope="session")
def benchmark_solution(benchmark_spec, benchmark_grid):
    return solve(benchmark_spec, benchmark_grid)


@pytest.fixture(scope="session")
def benchmark_params():
    return solve_params(10.0, -5.0)
