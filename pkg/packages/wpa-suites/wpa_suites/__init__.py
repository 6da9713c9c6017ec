"""wpa-suites: built-in benchmark suites for wpa."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version('wpa-suites')
except PackageNotFoundError:
    # Fallback for development environment
    __version__ = 'unknown'
