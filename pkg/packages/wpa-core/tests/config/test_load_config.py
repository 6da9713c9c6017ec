"""Tests for load_config and resolve_config."""

from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError
from returns.result import Failure, Success

from wpa_core.config import (
    CheckConfig,
    ConfigLoadError,
    SolverConfig,
    SuiteConfig,
    WpaConfig,
    get_config_path,
    load_config,
    resolve_config,
)


class TestModels:
    def test_defaults(self):
        cfg = WpaConfig()
        assert cfg.solver == SolverConfig(max_neg=None, witness_cap=200_000, peephole=True)
        assert cfg.check == CheckConfig(box=10, quantifier_box=None, max_quantifier_box=60)
        assert cfg.suites == []

    def test_suite_defaults(self):
        suite = SuiteConfig(name='small', module='wpa_suites.small')
        assert suite.enabled
        assert suite.options == {}

    @pytest.mark.parametrize('kwargs', [{'max_neg': -1}, {'witness_cap': 0}])
    def test_solver_bounds(self, kwargs):
        with pytest.raises(ValidationError):
            SolverConfig(**kwargs)

    def test_check_bounds(self):
        with pytest.raises(ValidationError):
            CheckConfig(box=-1)


class TestLoadConfig:
    def test_valid(self, valid_config_file: Path):
        result = load_config(valid_config_file)
        assert isinstance(result, Success)
        cfg = result.unwrap()
        assert cfg.solver.max_neg == 4
        assert cfg.solver.witness_cap == 5000
        assert cfg.check.box == 3
        assert [s.name for s in cfg.suites] == ['small', 'scaling']
        assert not cfg.suites[1].enabled
        assert cfg.suites[1].options == {'sizes': [1, 2]}

    def test_minimal(self, minimal_config_file: Path):
        assert load_config(minimal_config_file).unwrap() == WpaConfig()

    def test_missing_file(self, tmp_path: Path):
        result = load_config(tmp_path / 'nope.toml')
        assert isinstance(result, Failure)
        assert 'Config file not found' in str(result.failure())

    def test_invalid_syntax(self, invalid_syntax_config_file: Path):
        result = load_config(invalid_syntax_config_file)
        assert isinstance(result.failure(), ConfigLoadError)
        assert 'Failed to parse TOML config' in str(result.failure())

    def test_invalid_values(self, invalid_values_config_file: Path):
        result = load_config(invalid_values_config_file)
        assert 'Config validation failed' in str(result.failure())

    def test_missing_fields(self, missing_fields_config_file: Path):
        result = load_config(missing_fields_config_file)
        assert 'Config validation failed' in str(result.failure())


class TestGetConfigPath:
    def test_returns_xdg_path(self):
        fake_home = Path('/tmp/fakexdg')
        with patch('wpa_core.config.xdg_config_home', return_value=fake_home):
            assert get_config_path(None) == fake_home / 'wpa' / 'config.toml'

    def test_returns_target_config_path(self):
        target = Path('/tmp/target/config.toml')
        assert get_config_path(target) == target


class TestResolveConfig:
    def test_defaults_without_file(self, tmp_path: Path):
        with patch('wpa_core.config.xdg_config_home', return_value=tmp_path):
            cfg, info = resolve_config(None).unwrap()
        assert cfg == WpaConfig()
        assert info.file == tmp_path / 'wpa' / 'config.toml'

    def test_default_location_used_when_present(self, tmp_path: Path):
        (tmp_path / 'wpa').mkdir()
        (tmp_path / 'wpa' / 'config.toml').write_text('[check]\nbox = 2\n')
        with patch('wpa_core.config.xdg_config_home', return_value=tmp_path):
            cfg, info = resolve_config(None).unwrap()
        assert cfg.check.box == 2
        assert info.directory == (tmp_path / 'wpa').resolve()

    def test_explicit_path_must_exist(self, tmp_path: Path):
        assert isinstance(resolve_config(tmp_path / 'missing.toml'), Failure)

    def test_explicit_path(self, valid_config_file: Path):
        cfg, info = resolve_config(valid_config_file).unwrap()
        assert cfg.solver.max_neg == 4
        assert info.file == valid_config_file
