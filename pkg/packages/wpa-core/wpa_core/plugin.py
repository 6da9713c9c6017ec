"""Benchmark suite base class for wpa."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, NamedTuple


class BenchInstance(NamedTuple):
    """One formula of a suite. ``expected`` is the known verdict, None when unknown."""

    name: str
    text: str
    expected: bool | None = None
    size: int = 0


class BenchSuite(ABC):
    """Base class for all benchmark suites."""

    def __init__(self, options: dict[str, Any], config_dir: Path) -> None:
        """Initialize the suite.

        Args:
            options: Suite-specific options dictionary.
            config_dir: Directory containing the config file. Used for resolving
                relative paths.
        """
        self.options = options
        self._config_dir = config_dir

    def resolve_path(self, path: str | Path) -> Path:
        """Resolve a path relative to the config directory.

        Absolute paths are returned as-is (after normalization).

        Example:
            >>> suite.resolve_path('formulas/')
            PosixPath('/path/to/config/dir/formulas')
        """
        path = Path(path)
        if not path.is_absolute():
            path = self._config_dir / path
        return path.resolve()

    @abstractmethod
    def name(self) -> str:
        """Return the suite identifier name."""

    @abstractmethod
    def instances(self) -> list[BenchInstance]:
        """Return the formulas of the suite, smallest first."""
