"""Pytest configuration for the acceptance runs."""

import os
import sys

import pytest

from tests.helpers.fixtures import (  # noqa: F401
    caps,
    clean_environment,
    petersen_graph,
)


def pytest_configure(config):
    """Make the project root importable when the package is not installed."""
    root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
    if root_dir not in sys.path:
        sys.path.insert(0, root_dir)


@pytest.fixture(scope="session")
def default_reports():
    """Reports of the default suites, computed once per session."""
    from helix_lab.harness.suites import verify

    cache = {}

    def _report(suite: str):
        if suite not in cache:
            cache[suite] = verify(suite)
        return cache[suite]

    return _report
