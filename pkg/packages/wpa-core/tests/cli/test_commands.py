"""Tests for the decide, eval, check and gen-noncong commands."""

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

from wpa_core.cli import app
from wpa_core.oracle import Mismatch

runner = CliRunner()

NONCONG = 'A y. (x = 2*y -> y = 3*x + 1)'
EVEN_JSON = '{"dim":1,"chain":[{"union":[{"dim":1,"base":["0"],"periods":[["2"]]}]}]}'


@pytest.fixture()
def config(minimal_config_file: Path) -> list[str]:
    return ['--config', str(minimal_config_file)]


class TestVersionAndHelp:
    def test_version(self):
        result = runner.invoke(app, ['-v'])
        assert result.exit_code == 0
        assert 'wpa version' in result.output

    def test_help(self):
        result = runner.invoke(app, ['-h'])
        assert result.exit_code == 0
        for command in ('decide', 'eval', 'check', 'gen-noncong', 'bench'):
            assert command in result.output

    def test_command_help(self):
        result = runner.invoke(app, ['decide', '-h'])
        assert result.exit_code == 0
        assert '--witness' in result.output


class TestDecide:
    def test_sat(self, formula_file, config):
        result = runner.invoke(app, ['decide', str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 0
        assert 'sat' in result.output.splitlines()

    def test_unsat(self, formula_file, config):
        result = runner.invoke(app, ['decide', str(formula_file('A x. E y. x = 2*y')), *config])
        assert result.exit_code == 0
        assert 'unsat' in result.output.splitlines()

    def test_witness(self, formula_file, config):
        result = runner.invoke(app, ['decide', '--witness', str(formula_file(NONCONG)), *config])
        assert result.exit_code == 0
        line = next(row for row in result.output.splitlines() if row.startswith('witness: '))
        assert line.startswith('witness: x=')
        assert int(line.removeprefix('witness: x=')) % 2 == 1

    def test_json_to_stdout(self, formula_file, config):
        result = runner.invoke(app, ['decide', '--json', '-', str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 0
        payload = json.loads(next(row for row in result.output.splitlines() if row.startswith('{')))
        assert payload['dim'] == 1

    def test_json_to_file(self, formula_file, config, tmp_path: Path):
        out = tmp_path / 'set.json'
        result = runner.invoke(app, ['decide', '--json', str(out), str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 0
        assert json.loads(out.read_text())['chain']

    def test_parse_error(self, formula_file, config):
        result = runner.invoke(app, ['decide', str(formula_file('x = = 1')), *config])
        assert result.exit_code == 2
        assert '[ERROR]' in result.output

    def test_budget(self, formula_file, config):
        result = runner.invoke(app, ['decide', '-k', '1', str(formula_file(NONCONG)), *config])
        assert result.exit_code == 3

    def test_budget_from_config(self, formula_file, tmp_path: Path):
        cfg = tmp_path / 'budget.toml'
        cfg.write_text('[solver]\nmax_neg = 0\n')
        result = runner.invoke(app, ['decide', str(formula_file(NONCONG)), '--config', str(cfg)])
        assert result.exit_code == 3

    def test_search_exhausted(self, formula_file, tmp_path: Path):
        cfg = tmp_path / 'cap.toml'
        cfg.write_text('[solver]\nwitness_cap = 1\n')
        result = runner.invoke(app, ['decide', '-w', str(formula_file(NONCONG)), '--config', str(cfg)])
        assert result.exit_code == 5

    def test_bad_config(self, formula_file, invalid_values_config_file: Path):
        result = runner.invoke(app, ['decide', str(formula_file('x = 1')), '--config', str(invalid_values_config_file)])
        assert result.exit_code == 1
        assert 'Config validation failed' in result.output

    def test_missing_formula_file(self, tmp_path: Path, config):
        result = runner.invoke(app, ['decide', str(tmp_path / 'nope.wpa'), *config])
        assert result.exit_code != 0


class TestEval:
    def test_prints_json(self, formula_file, config):
        result = runner.invoke(app, ['eval', str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == EVEN_JSON

    def test_budget(self, formula_file, config):
        result = runner.invoke(app, ['eval', '--max-neg', '0', str(formula_file('!x = 1')), *config])
        assert result.exit_code == 3


class TestCheck:
    def test_agreement(self, formula_file, config):
        result = runner.invoke(app, ['check', '-b', '3', str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 0
        assert '[CHECK] Solver verdict: sat' in result.output
        assert '[SUCCESS] OK: 7 point(s) of [-3, 3]^1 agree' in result.output

    def test_box_from_config(self, formula_file, valid_config_file: Path):
        result = runner.invoke(app, ['check', str(formula_file('E y. x = 2*y')), '--config', str(valid_config_file)])
        assert result.exit_code == 0
        assert '[-3, 3]^1' in result.output

    def test_skipped(self, formula_file, tmp_path: Path):
        cfg = tmp_path / 'check.toml'
        cfg.write_text('[check]\nbox = 4\nmax_quantifier_box = 5\n')
        result = runner.invoke(app, ['check', str(formula_file(NONCONG)), '--config', str(cfg)])
        assert result.exit_code == 0
        assert '[SKIPPED]' in result.output

    def test_explicit_quantifier_box(self, formula_file, config):
        result = runner.invoke(app, ['check', '-b', '2', '-q', '10', str(formula_file(NONCONG)), *config])
        assert result.exit_code == 0
        assert '[SUCCESS]' in result.output

    def test_mismatch(self, formula_file, config):
        with patch('wpa_core.commands.check.compare', return_value=Mismatch((1,), True, False)):
            result = runner.invoke(app, ['check', str(formula_file('E y. x = 2*y')), *config])
        assert result.exit_code == 4
        assert '[ERROR] Mismatch at x=1: solver says True, oracle says False' in result.output

    def test_parse_error(self, formula_file, config):
        result = runner.invoke(app, ['check', str(formula_file('x = 1 $')), *config])
        assert result.exit_code == 2


class TestGenNoncong:
    def test_single(self):
        result = runner.invoke(app, ['gen-noncong', '2:0'])
        assert result.exit_code == 0
        assert result.output.strip() == NONCONG

    def test_generated_formula_decides(self, formula_file, config):
        text = runner.invoke(app, ['gen-noncong', '2:0,2:1']).output
        result = runner.invoke(app, ['decide', str(formula_file(text)), *config])
        assert 'unsat' in result.output.splitlines()

    @pytest.mark.parametrize('constraints', ['1:0', '3:5', 'x'])
    def test_rejected(self, constraints: str):
        result = runner.invoke(app, ['gen-noncong', constraints])
        assert result.exit_code == 1
        assert '[ERROR]' in result.output
