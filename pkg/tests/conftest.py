import os

import numpy as np
import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--backend",
        action="store",
        default="memory",
        help="Backend to use for harness tests: memory or file"
    )
    parser.addoption(
        "--show",
        action="store",
        default="",
        help="Comma-separated: telemetry,counters"
    )


def pytest_configure(config):
    backend = config.getoption("--backend")
    if backend:
        os.environ["TOMOQA_TEST_BACKEND"] = backend

    show = config.getoption("--show")
    if show:
        os.environ["TOMOQA_VERBOSE"] = show


@pytest.fixture
def rng():
    """Seeded generator so that randomized property tests are repeatable"""
    return np.random.default_rng(20240611)
