"""Tests for NonCongruenceSuite."""

from pathlib import Path

import pytest

from wpa_core.generators import GeneratorError
from wpa_core.solver import solve
from wpa_suites.noncong import DEFAULT_SYSTEMS, NonCongruenceSuite


class TestNonCongruenceSuite:
    """Tests for NonCongruenceSuite."""

    def test_name(self, tmp_path: Path) -> None:
        assert NonCongruenceSuite({}, tmp_path).name() == 'noncong'

    def test_default_systems(self, tmp_path: Path) -> None:
        instances = NonCongruenceSuite({}, tmp_path).instances()
        assert [i.name for i in instances] == list(DEFAULT_SYSTEMS)
        assert [i.expected for i in instances] == [True, True, False, False, True]

    def test_size_is_constraint_count(self, tmp_path: Path) -> None:
        (instance,) = NonCongruenceSuite({'systems': ['2:1,3:0,5:4']}, tmp_path).instances()
        assert instance.size == 3

    def test_solver_agrees(self, tmp_path: Path) -> None:
        """Test the residue-count verdicts against the solver."""
        systems = ['2:0', '2:0,2:1', '3:0,3:1', '2:0,4:1,4:3']
        for instance in NonCongruenceSuite({'systems': systems}, tmp_path).instances():
            assert solve(instance.text).unwrap().satisfiable == instance.expected, instance.name

    def test_bad_system(self, tmp_path: Path) -> None:
        with pytest.raises(GeneratorError):
            NonCongruenceSuite({'systems': ['1:0']}, tmp_path).instances()
