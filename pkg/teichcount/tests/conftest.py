"""
Pytest configuration and fixtures for testing
"""

import os
import sys

import pytest

# Add the repository root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

# Sweeps run inline so results and logs are deterministic
os.environ["TEICHCOUNT_THREADS"] = "1"

from teichcount.config.settings import get_settings  # noqa: E402
from teichcount.flatsurf import build_surface  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-scale acceptance runs (deselected by default)")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Single-threaded settings, rebuilt for every test"""
    monkeypatch.setenv("TEICHCOUNT_THREADS", "1")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def surface_q2():
    return build_surface(1, 2, "-1,1,2,1")


@pytest.fixture
def surface_q3():
    return build_surface(1, 3, "-1,1,2,1")
