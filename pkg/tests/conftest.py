import os

import pytest

from frobkit.ringspec import load_ring
from frobkit.toric import polynomial_ring


@pytest.fixture
def datadir(request):
    return os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def a1():
    """The A1 singularity k[x, y, z]/(xy - z^2) over F_3."""
    return load_ring("A1", 3)


@pytest.fixture(scope="session")
def a1_char2():
    return load_ring("A1", 2)


@pytest.fixture(scope="session")
def quadric():
    """The quadric cone k[x, y, u, v]/(xy - uv) over F_2."""
    return load_ring("quadric3", 2)


@pytest.fixture(scope="session")
def plane():
    return polynomial_ring(2, 3)


# Provide a --run-regression-tests CLI option to run slow regression tests separately.
def pytest_addoption(parser):
    parser.addoption(
        "--run-regression-tests",
        action="store_true",
        help="Run (slow) regression tests",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "regression_test: mark test as a (slow) regression test"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-regression-tests"):
        # --run-regression-tests given in cli: do not skip slow tests
        return
    skip_regression_test = pytest.mark.skip(
        reason="need --run-regression-tests option to run"
    )
    for item in items:
        if "regression_test" in item.keywords:
            item.add_marker(skip_regression_test)
