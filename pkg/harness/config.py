"""Configuration management for ncfree.

This module handles configuration for the CLI and the verification
harness, including:
- Default alphabet size and truncation degree
- Seed and sizes of the randomized fixture batches
- Coefficient bounds for random rationals
- Worker processes and the NC(n) enumeration cap

Configuration is loaded from (in order of precedence):
1. Environment variables (NCF_* prefix)
2. Project-local .ncfree.toml
3. User config ~/.config/ncfree/config.toml
4. Built-in defaults
"""

import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from ncfree.errors import ValidationError
from ncfree.ncpart import DEFAULT_NC_CAP

# Try to import tomllib (Python 3.11+) or tomli as fallback
try:
    import tomllib
except ImportError:
    try:
        import tomli as tomllib
    except ImportError:
        tomllib = None


@dataclass
class Config:
    """Main configuration for ncfree."""

    # Alphabet size and truncation degree used when a command omits them
    default_s: int = 2
    default_maxdeg: int = 4

    # Seed for the fixture generator
    seed: int = 7

    # Worker processes for coefficient-level parallelism
    jobs: int = 1

    # Largest n accepted by NC(n) enumeration
    nc_cap: int = DEFAULT_NC_CAP

    # Fixture batch sizes of the verification suites
    group_fixtures: int = 200
    hopf_fixtures: int = 50
    onedim_fixtures: int = 100

    # Random rationals: numerator in [-numerator_bound, numerator_bound],
    # denominator in [1, denominator_bound]
    numerator_bound: int = 9
    denominator_bound: int = 4

    # Weighted-degree bound of representations (None means maxdeg - 1)
    degree_bound: Optional[int] = None

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, int):
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    raise ValidationError(f"Config value {f.name}={value!r} is not an integer") from None
                setattr(self, f.name, value)
        for name in ("default_s", "default_maxdeg", "jobs", "nc_cap", "denominator_bound"):
            if getattr(self, name) < 1:
                raise ValidationError(f"Config value {name} must be positive, got {getattr(self, name)}")
        for name in ("group_fixtures", "hopf_fixtures", "onedim_fixtures", "numerator_bound"):
            if getattr(self, name) < 0:
                raise ValidationError(f"Config value {name} must be non-negative, got {getattr(self, name)}")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ValidationError(f"Config value degree_bound must be non-negative, got {self.degree_bound}")

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# Default configuration file locations
USER_CONFIG_PATH = Path.home() / ".config" / "ncfree" / "config.toml"
PROJECT_CONFIG_NAME = ".ncfree.toml"

# Config field -> environment variable
ENV_OVERRIDES = {
    "seed": "NCF_SEED",
    "jobs": "NCF_JOBS",
    "nc_cap": "NCF_NC_CAP",
    "default_s": "NCF_S",
    "default_maxdeg": "NCF_MAXDEG",
    "degree_bound": "NCF_DEGREE_BOUND",
}

# TOML section -> fields it may set
SECTIONS = {
    "defaults": ("default_s", "default_maxdeg", "degree_bound", "nc_cap", "jobs"),
    "fixtures": ("seed", "group_fixtures", "hopf_fixtures", "onedim_fixtures",
                 "numerator_bound", "denominator_bound"),
}


def _find_project_config() -> Optional[Path]:
    """Find project-local config file by walking up from cwd."""
    current = Path.cwd()
    while current != current.parent:
        config_path = current / PROJECT_CONFIG_NAME
        if config_path.exists():
            return config_path
        current = current.parent
    return None


def _load_toml(path: Path) -> Dict[str, Any]:
    """Load a TOML file and return its contents."""
    if tomllib is None:
        # No TOML parser available, return empty dict
        return {}
    if not path.exists():
        return {}
    with open(path, "rb") as f:
        try:
            return tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise ValidationError(f"Invalid TOML in {path}: {e}") from e


def load_config() -> Config:
    """Load configuration from files and environment.

    Returns:
        Config object with merged settings.

    Raises:
        ValidationError: on unparsable files or non-integer values.
    """
    values: Dict[str, Any] = {}

    # Load user config, then project config (overrides user)
    project_path = _find_project_config()
    for data in (_load_toml(USER_CONFIG_PATH), _load_toml(project_path) if project_path else {}):
        for section, names in SECTIONS.items():
            table = data.get(section, {})
            for name in names:
                if name in table:
                    values[name] = table[name]

    # Environment overrides (highest precedence)
    for name, var in ENV_OVERRIDES.items():
        if (env_value := os.environ.get(var)) is not None and env_value != "":
            values[name] = env_value

    return Config(**values)


def get_config() -> Config:
    """Get the current configuration (cached).

    Returns:
        Config object.
    """
    global _cached_config
    if _cached_config is None:
        _cached_config = load_config()
    return _cached_config


def reset_config():
    """Reset the cached configuration."""
    global _cached_config
    _cached_config = None


# Cached config instance
_cached_config: Optional[Config] = None


def generate_sample_config() -> str:
    """Generate a sample configuration file.

    Returns:
        Sample TOML configuration as a string.
    """
    return '''# ncfree configuration
# Place this file at ~/.config/ncfree/config.toml (user)
# or .ncfree.toml in your project directory (project)

[defaults]
# Alphabet size and truncation degree when a command omits --s / --maxdeg
default_s = 2
default_maxdeg = 4

# Weighted-degree bound D of representations (default: maxdeg - 1)
# degree_bound = 3

# Largest n for which NC(n) is enumerated
nc_cap = 12

# Worker processes for coefficient-level work
jobs = 1

[fixtures]
# Seed of the fixture generator used by `ncf verify`
seed = 7

# Batch sizes of the verification suites
group_fixtures = 200
hopf_fixtures = 50
onedim_fixtures = 100

# Random coefficients p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound
numerator_bound = 9
denominator_bound = 4

# Environment overrides: NCF_SEED, NCF_JOBS, NCF_NC_CAP, NCF_S, NCF_MAXDEG,
# NCF_DEGREE_BOUND
'''
