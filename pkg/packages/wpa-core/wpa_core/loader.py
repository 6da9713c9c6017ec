"""Benchmark suite loader for wpa."""

import importlib
import importlib.util
import inspect
import sys
from pathlib import Path
from typing import Any

import pluggy

from wpa_core.config import SuiteConfig, WpaConfig
from wpa_core.hookspecs import WpaSpecs, hookimpl
from wpa_core.plugin import BenchSuite

BUILTIN_SUITES: tuple[SuiteConfig, ...] = (
    SuiteConfig(name='small', module='wpa_suites.small'),
    SuiteConfig(name='scaling', module='wpa_suites.scaling'),
    SuiteConfig(name='noncong', module='wpa_suites.noncong'),
)


class PluginLoadError(Exception):
    """Raised when suite loading fails."""


def _is_filesystem_path(module_str: str) -> bool:
    """Determine if a module string refers to a filesystem path."""
    return '/' in module_str or '\\' in module_str or module_str.endswith('.py') or module_str.startswith('.')


def _resolve_module_path(module_str: str, config_dir: Path) -> Path:
    """Resolve a module string to an absolute path, relative ones against config_dir.

    Raises:
        PluginLoadError: If the resolved path does not exist.
    """
    path = Path(module_str)
    if not path.is_absolute():
        path = config_dir / path
    resolved = path.resolve()
    if not resolved.exists():
        raise PluginLoadError(f'Suite file does not exist: {resolved}')
    return resolved


def _load_module_from_path(name: str, path: Path) -> Any:
    """Load a Python module from a filesystem path.

    Raises:
        PluginLoadError: If the module cannot be loaded.
    """
    module_name = f'wpa_suite_{name}'
    spec = importlib.util.spec_from_file_location(module_name, path)
    if spec is None or spec.loader is None:
        raise PluginLoadError(f"Suite '{name}': failed to create module spec from {path}")
    module = importlib.util.module_from_spec(spec)
    sys.modules[module_name] = module
    try:
        spec.loader.exec_module(module)
    except Exception as e:
        del sys.modules[module_name]
        raise PluginLoadError(f"Suite '{name}': failed to execute module: {e}") from e
    return module


def _load_module_from_dotpath(name: str, module_path: str) -> Any:
    try:
        return importlib.import_module(module_path)
    except ImportError as e:
        raise PluginLoadError(f"Suite '{name}': module '{module_path}' not found") from e


def _discover_suite_classes(name: str, module: Any) -> list[type[BenchSuite]]:
    """Concrete BenchSuite subclasses defined or imported in a module.

    Raises:
        PluginLoadError: If there are none.
    """
    classes = [
        obj
        for obj in vars(module).values()
        if inspect.isclass(obj) and issubclass(obj, BenchSuite) and obj is not BenchSuite and not inspect.isabstract(obj)
    ]
    if not classes:
        raise PluginLoadError(f"Suite '{name}': no BenchSuite subclasses found in module")
    return classes


def _instantiate_suites(
    name: str,
    classes: list[type[BenchSuite]],
    options: dict[str, Any],
    config_dir: Path,
) -> list[BenchSuite]:
    """Instantiate discovered suite classes with options.

    Raises:
        PluginLoadError: If instantiation fails.
    """
    instances: list[BenchSuite] = []
    for cls in classes:
        try:
            instances.append(cls(options, config_dir))
        except Exception as e:
            raise PluginLoadError(f"Suite '{name}': failed to instantiate {cls.__name__}: {e}") from e
    return instances


class _SuiteHookRelay:
    """Wrapper that exposes suite instances via the pluggy hook."""

    def __init__(self, suites: list[BenchSuite]) -> None:
        self._suites = suites

    @hookimpl
    def register_suites(self) -> list[BenchSuite]:
        return self._suites


def _load_single_suite(suite_cfg: SuiteConfig, config_dir: Path) -> list[BenchSuite]:
    if _is_filesystem_path(suite_cfg.module):
        path = _resolve_module_path(suite_cfg.module, config_dir)
        module = _load_module_from_path(suite_cfg.name, path)
    else:
        module = _load_module_from_dotpath(suite_cfg.name, suite_cfg.module)
    classes = _discover_suite_classes(suite_cfg.name, module)
    return _instantiate_suites(suite_cfg.name, classes, suite_cfg.options, config_dir)


def load_suites(
    config: WpaConfig,
    config_path: Path,
    pm: pluggy.PluginManager | None = None,
) -> pluggy.PluginManager:
    """Load all enabled suites and register them with pluggy.

    The built-in suites are used when the configuration lists none.

    Args:
        config: The validated wpa configuration.
        config_path: Path to the config file (used to resolve relative suite paths).
        pm: Optional existing PluginManager. Created if not provided.

    Raises:
        PluginLoadError: If any enabled suite fails to load.
    """
    if pm is None:
        pm = pluggy.PluginManager('wpa')
        pm.add_hookspecs(WpaSpecs)

    config_dir = config_path.parent.resolve()
    entries = config.suites or list(BUILTIN_SUITES)

    suites: list[BenchSuite] = []
    for suite_cfg in entries:
        if not suite_cfg.enabled:
            continue
        suites.extend(_load_single_suite(suite_cfg, config_dir))

    pm.register(_SuiteHookRelay(suites), name='wpa_suite_relay')
    return pm


def get_suites(pm: pluggy.PluginManager) -> list[BenchSuite]:
    """Retrieve every registered suite instance, in registration order."""
    results: list[BenchSuite] = []
    for suite_list in pm.hook.register_suites():
        results.extend(suite_list)
    return results
