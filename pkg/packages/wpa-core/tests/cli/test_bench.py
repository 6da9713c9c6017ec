"""Tests for the bench command."""

from pathlib import Path
from unittest.mock import patch

import polars as pl
from typer.testing import CliRunner

from wpa_core.cli import app
from wpa_core.commands.bench import mismatches, scaling_ratios
from wpa_core.loader import PluginLoadError

from ..conftest import DummySuite, WrongVerdictSuite

runner = CliRunner()

SMALL_ONLY_TOML = """\
[[suites]]
name = "small"
module = "wpa_suites.small"
"""


def _config(tmp_path: Path, text: str = SMALL_ONLY_TOML) -> list[str]:
    p = tmp_path / 'bench.toml'
    p.write_text(text)
    return ['--config', str(p)]


class TestBenchCommand:
    def test_small_suite(self, tmp_path: Path):
        result = runner.invoke(app, ['bench', *_config(tmp_path)])
        assert result.exit_code == 0
        assert '[BENCH] 10 instance(s) from 1 suite(s)' in result.output
        assert '[SUCCESS] All verdicts match' in result.output

    def test_report_csv(self, tmp_path: Path):
        report = tmp_path / 'report.csv'
        result = runner.invoke(app, ['bench', '-r', str(report), *_config(tmp_path)])
        assert result.exit_code == 0
        df = pl.read_csv(report)
        assert df.height == 10
        assert df.columns[:3] == ['suite', 'instance', 'size']
        assert (df['verdict'] == df['expected']).all()

    def test_suite_filter(self, tmp_path: Path):
        with (
            patch('wpa_core.commands.bench.load_suites'),
            patch(
                'wpa_core.commands.bench.get_suites',
                return_value=[DummySuite({}, tmp_path), WrongVerdictSuite({}, tmp_path)],
            ),
        ):
            result = runner.invoke(app, ['bench', '-s', 'dummy', *_config(tmp_path)])
        assert result.exit_code == 0
        assert '[BENCH] 2 instance(s) from 1 suite(s)' in result.output

    def test_unknown_suite(self, tmp_path: Path):
        result = runner.invoke(app, ['bench', '-s', 'ghost', *_config(tmp_path)])
        assert result.exit_code == 1
        assert 'Unknown suite(s): ghost' in result.output

    def test_wrong_verdict(self, tmp_path: Path):
        with (
            patch('wpa_core.commands.bench.load_suites'),
            patch('wpa_core.commands.bench.get_suites', return_value=[WrongVerdictSuite({}, tmp_path)]),
        ):
            result = runner.invoke(app, ['bench', *_config(tmp_path)])
        assert result.exit_code == 4
        assert '[ERROR] wrong/even-claimed-unsat: got sat, expected unsat' in result.output

    def test_plugin_load_error(self, tmp_path: Path):
        with patch('wpa_core.commands.bench.load_suites', side_effect=PluginLoadError('suite failed to load')):
            result = runner.invoke(app, ['bench', *_config(tmp_path)])
        assert result.exit_code == 1
        assert 'suite failed to load' in result.output

    def test_config_error(self, tmp_path: Path):
        result = runner.invoke(app, ['bench', *_config(tmp_path, 'suites = 3')])
        assert result.exit_code == 1


class TestReportHelpers:
    def test_scaling_ratios(self):
        report = pl.DataFrame(
            {
                'suite': ['scaling'] * 4,
                'size': [1, 2, 3, 6],
                'seconds': [1.0, 3.0, 5.0, 20.0],
            }
        )
        ratios = scaling_ratios(report)
        assert ratios['size'].to_list() == [2, 6]
        assert ratios['ratio'].to_list() == [3.0, 4.0]

    def test_mismatches_ignore_unknown_expectations(self):
        report = pl.DataFrame(
            {
                'suite': ['s', 's', 's'],
                'instance': ['a', 'b', 'c'],
                'verdict': ['sat', 'unsat', 'error'],
                'expected': ['sat', None, 'unsat'],
            }
        )
        assert mismatches(report)['instance'].to_list() == ['c']
