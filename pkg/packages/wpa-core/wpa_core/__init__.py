"""wpa-core: decision procedure for weak Presburger arithmetic with few negations."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version('wpa-core')
except PackageNotFoundError:
    # Fallback for development environment
    __version__ = 'unknown'
