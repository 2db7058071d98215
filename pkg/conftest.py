"""Pytest configuration and fixtures for the ncfree test suite.

This module provides:
- Seeded fixture factories (--seed, default from configuration)
- Reference tables for NC(n) and the Kreweras complement
- The longrun marker for exhaustive checks skipped by default

Usage:
    # Default run
    pytest

    # Different fixture seed, include the exhaustive checks
    pytest --seed=11 --longrun

    # Parallel
    pytest -n auto
"""

from typing import Dict, List

import pytest

from harness.config import Config, get_config, reset_config
from harness.fixtures import REFERENCE_KREWERAS_ARROWS, REFERENCE_NC_LISTS, FixtureFactory


# ============================================================================
# Configuration
# ============================================================================

def pytest_addoption(parser):
    """Add custom command-line options."""
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=None,
        help="Seed of the random fixture factory (default: config seed)"
    )
    parser.addoption(
        "--longrun",
        action="store_true",
        default=False,
        help="Include long-running exhaustive checks that are skipped by default"
    )


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "longrun: marks tests that take 60+ seconds (skipped unless --longrun)"
    )


def pytest_collection_modifyitems(config, items):
    """Skip longrun tests unless --longrun is specified."""
    if config.getoption("--longrun"):
        return

    skip_longrun = pytest.mark.skip(reason="longrun test: use --longrun to include")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip_longrun)


# ============================================================================
# Fixtures
# ============================================================================

@pytest.fixture(scope='session')
def config() -> Config:
    """Effective configuration; NCF_* variables apply."""
    reset_config()
    return get_config()


@pytest.fixture
def factory(request, config) -> FixtureFactory:
    """A fresh seeded factory per test, so each test sees the same draws."""
    seed = request.config.getoption("--seed")
    return FixtureFactory.from_config(config, seed)


@pytest.fixture(scope='session')
def reference_nc_lists() -> Dict[int, List[List[List[int]]]]:
    return REFERENCE_NC_LISTS


@pytest.fixture(scope='session')
def reference_kreweras_arrows() -> Dict[int, Dict[int, int]]:
    return REFERENCE_KREWERAS_ARROWS


@pytest.fixture
def isolated_config(monkeypatch, tmp_path):
    """Run with no user/project config file and no NCF_* variables."""
    import harness.config as config_module

    for var in config_module.ENV_OVERRIDES.values():
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setattr(config_module, "USER_CONFIG_PATH", tmp_path / "user.toml")
    monkeypatch.chdir(tmp_path)
    reset_config()
    yield tmp_path
    reset_config()
