import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)


@pytest.fixture
def plane_points(rng):
    return rng.uniform(0.0, 2.0, (100, 2))


@pytest.fixture
def interior_points(rng):
    from c2trig.orthogonality import sample_interior

    return sample_interior(100, rng)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
