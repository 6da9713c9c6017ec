"""Configuration models and loader for wpa."""

import tomllib
from pathlib import Path
from typing import Any, NamedTuple, Optional

from pydantic import BaseModel, Field
from returns.result import Failure, Result, Success, safe
from xdg_base_dirs import xdg_config_home

from wpa_core.result import bind_safe


class SolverConfig(BaseModel):
    """Decision procedure settings."""

    max_neg: int | None = Field(default=None, ge=0)
    witness_cap: int = Field(default=200_000, gt=0)
    peephole: bool = True


class CheckConfig(BaseModel):
    """Brute-force cross-check settings."""

    box: int = Field(default=10, ge=0)
    quantifier_box: int | None = Field(default=None, ge=0)
    max_quantifier_box: int = Field(default=60, ge=0)


class SuiteConfig(BaseModel):
    """Configuration for a single benchmark suite module."""

    name: str
    module: str
    enabled: bool = True
    options: dict[str, Any] = Field(default_factory=dict)


class WpaConfig(BaseModel):
    """Top-level configuration for wpa."""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    check: CheckConfig = Field(default_factory=CheckConfig)
    suites: list[SuiteConfig] = Field(default_factory=list)


class ConfigLoadError(Exception):
    """Raised when configuration loading fails."""


class ConfigInfo(NamedTuple):
    """Holds the config file path and its parent directory."""

    file: Path
    directory: Path


_config_bind_safe = bind_safe(ConfigLoadError)


def get_config_path(path: Optional[Path]) -> Path:
    """Returns `path`, or the default `$XDG_CONFIG_HOME/wpa/config.toml` when it is None."""
    if path is not None:
        return path
    return xdg_config_home() / 'wpa' / 'config.toml'


def _ensure_config_file_exists(config_path: Path) -> Result[Path, ConfigLoadError]:
    if not config_path.exists():
        return Failure(ConfigLoadError(f'Config file not found: {config_path}'))
    return Success(config_path)


@safe
def _read_file(path: Path) -> bytes:
    """Read file bytes from path.

    Raises:
        OSError: If the file cannot be read.
    """
    return path.read_bytes()


@safe
def _parse_toml(raw: bytes) -> dict:
    """Parse TOML bytes to a dictionary.

    Raises:
        tomllib.TOMLDecodeError: If the TOML syntax is invalid.
    """
    return tomllib.loads(raw.decode())


@safe
def _validate_config(data: dict) -> WpaConfig:
    return WpaConfig(**data)


def load_config(config_path: Path) -> Result[WpaConfig, ConfigLoadError]:
    """Load and validate a TOML configuration file.

    Args:
        config_path: Path to the TOML configuration file.

    Returns:
        Success containing a validated WpaConfig instance.
        Failure containing ConfigLoadError if the file is not found,
        cannot be read, contains invalid TOML, or fails Pydantic validation.
    """
    return (
        _ensure_config_file_exists(config_path)
        .bind(_read_file_as_config_error)
        .bind(_config_bind_safe(_parse_toml, 'Failed to parse TOML config'))
        .bind(_config_bind_safe(_validate_config, 'Config validation failed'))
    )


def _read_file_as_config_error(path: Path) -> Result[bytes, ConfigLoadError]:
    return _read_file(path).alt(lambda e: ConfigLoadError(f'Failed to read config file: {e}'))


def resolve_config(path: Optional[Path]) -> Result[tuple[WpaConfig, ConfigInfo], ConfigLoadError]:
    """Load the configuration a command runs with.

    An explicit path must exist. Without one, the default location is used when present and
    the built-in defaults otherwise.
    """
    config_path = get_config_path(path)
    info = ConfigInfo(file=config_path, directory=config_path.parent.resolve())
    if path is None and not config_path.exists():
        return Success((WpaConfig(), info))
    return load_config(config_path).map(lambda config: (config, info))
