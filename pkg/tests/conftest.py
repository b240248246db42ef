"""Pytest configuration for the unit tests."""

import os
import sys

from tests.helpers.fixtures import (  # noqa: F401
    caps,
    clean_environment,
    cube,
    graph_factory,
    k4,
    looped_vertex,
    nonagon,
    path3,
    pentagon,
    petersen_graph,
    square,
    tiny_caps,
    triangle,
)


def pytest_configure(config):
    """Make the project root importable when the package is not installed."""
    root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
    if root_dir not in sys.path:
        sys.path.insert(0, root_dir)
