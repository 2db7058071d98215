"""Verification harness for ncfree.

This package provides utilities for:
- Configuration management (defaults, fixture sizes, seeds)
- Seeded fixture generation and reference tables
- Running the structural verification suites behind `ncf verify`
"""

from .config import get_config, load_config, reset_config, generate_sample_config, Config
from .fixtures import FixtureFactory, REFERENCE_NC_LISTS, REFERENCE_KREWERAS_ARROWS
from .suites import SUITES, CheckResult, run_suites, format_table

__all__ = [
    # Config functions
    'get_config',
    'load_config',
    'reset_config',
    'generate_sample_config',
    'Config',
    # Fixtures
    'FixtureFactory',
    'REFERENCE_NC_LISTS',
    'REFERENCE_KREWERAS_ARROWS',
    # Suites
    'SUITES',
    'CheckResult',
    'run_suites',
    'format_table',
]
