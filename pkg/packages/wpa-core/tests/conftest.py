"""Shared fixtures and helpers for wpa-core tests."""

from itertools import product
from pathlib import Path
from typing import Any, Callable

import pytest

from wpa_core.lattice import ShiftedLattice, shifted_lattice
from wpa_core.plugin import BenchInstance, BenchSuite
from wpa_core.sdf import DnfChain, chain_of_links
from wpa_core.unions import LatticeUnion


# ---------------------------------------------------------------------------
# Concrete suite classes for testing (ABC cannot be instantiated directly)
# ---------------------------------------------------------------------------


class DummySuite(BenchSuite):
    """Suite with one satisfiable and one unsatisfiable formula."""

    def name(self) -> str:
        return 'dummy'

    def instances(self) -> list[BenchInstance]:
        return [
            BenchInstance('even', 'E y. x = 2*y', True, 1),
            BenchInstance('never', 'E y. 2*y = 1', False, 1),
        ]


class WrongVerdictSuite(BenchSuite):
    """Suite whose recorded verdict is wrong on purpose."""

    def name(self) -> str:
        return 'wrong'

    def instances(self) -> list[BenchInstance]:
        return [BenchInstance('even-claimed-unsat', 'E y. x = 2*y', False, 1)]


class BrokenInitSuite(BenchSuite):
    """Suite that raises during __init__."""

    def __init__(self, options: dict[str, Any], config_dir: Path) -> None:
        raise RuntimeError('broken init')

    def name(self) -> str:
        return 'broken_init'

    def instances(self) -> list[BenchInstance]:
        return []


# ---------------------------------------------------------------------------
# TOML string constants
# ---------------------------------------------------------------------------

VALID_TOML = """\
[solver]
max_neg = 4
witness_cap = 5000

[check]
box = 3

[[suites]]
name = "small"
module = "wpa_suites.small"

[[suites]]
name = "scaling"
module = "wpa_suites.scaling"
enabled = false

[suites.options]
sizes = [1, 2]
"""

MINIMAL_TOML = ''

INVALID_TOML_SYNTAX = """\
[solver
max_neg = 2
"""

INVALID_VALUES_TOML = """\
[solver]
witness_cap = 0
"""

MISSING_FIELDS_TOML = """\
[[suites]]
name = "no_module"
"""

# ---------------------------------------------------------------------------
# Config file fixtures
# ---------------------------------------------------------------------------


@pytest.fixture()
def valid_config_file(tmp_path: Path) -> Path:
    """Create a temporary valid TOML config file."""
    p = tmp_path / 'config.toml'
    p.write_text(VALID_TOML)
    return p


@pytest.fixture()
def minimal_config_file(tmp_path: Path) -> Path:
    """Create an empty TOML config file."""
    p = tmp_path / 'config.toml'
    p.write_text(MINIMAL_TOML)
    return p


@pytest.fixture()
def invalid_syntax_config_file(tmp_path: Path) -> Path:
    p = tmp_path / 'config.toml'
    p.write_text(INVALID_TOML_SYNTAX)
    return p


@pytest.fixture()
def invalid_values_config_file(tmp_path: Path) -> Path:
    p = tmp_path / 'config.toml'
    p.write_text(INVALID_VALUES_TOML)
    return p


@pytest.fixture()
def missing_fields_config_file(tmp_path: Path) -> Path:
    p = tmp_path / 'config.toml'
    p.write_text(MISSING_FIELDS_TOML)
    return p


# ---------------------------------------------------------------------------
# Formula files
# ---------------------------------------------------------------------------


@pytest.fixture()
def formula_file(tmp_path: Path) -> Callable[[str], Path]:
    """Factory writing formula text to a fresh file."""
    counter = iter(range(1_000))

    def write(text: str) -> Path:
        p = tmp_path / f'formula_{next(counter)}.wpa'
        p.write_text(text, encoding='utf-8')
        return p

    return write


# ---------------------------------------------------------------------------
# Set helpers
# ---------------------------------------------------------------------------


def box_points(dim: int, radius: int):
    """All points of ``[-radius, radius]^dim``."""
    return product(range(-radius, radius + 1), repeat=dim)


def lat(base: tuple[int, ...], *periods: tuple[int, ...]) -> ShiftedLattice:
    return shifted_lattice(base, periods)


def union(dim: int, *cells: ShiftedLattice) -> LatticeUnion:
    return LatticeUnion.of(cells, dim)


def chain(dim: int, *links: LatticeUnion) -> DnfChain:
    return chain_of_links(dim, links)
