"""Tests for FileSuite."""

from pathlib import Path

from wpa_suites.files import FileSuite


class TestFileSuite:
    """Tests for FileSuite."""

    def test_reads_formulas_in_order(self, tmp_path: Path) -> None:
        """Test that *.wpa files are read sorted by name with their expectations."""
        formulas = tmp_path / 'formulas'
        formulas.mkdir()
        (formulas / 'b_odd.wpa').write_text('# expect: sat\nA y. (x = 2*y -> y = 3*x + 1)\n')
        (formulas / 'a_never.wpa').write_text('#expect: unsat\nE y. 2*y = 1\n')
        (formulas / 'c_open.wpa').write_text('x = 1\n')
        (formulas / 'notes.txt').write_text('ignored')

        instances = FileSuite({'path': 'formulas'}, tmp_path).instances()

        assert [i.name for i in instances] == ['a_never', 'b_odd', 'c_open']
        assert [i.expected for i in instances] == [False, True, None]
        assert instances[1].size == 2

    def test_name_option(self, tmp_path: Path) -> None:
        assert FileSuite({}, tmp_path).name() == 'files'
        assert FileSuite({'name': 'regressions'}, tmp_path).name() == 'regressions'

    def test_empty_directory(self, tmp_path: Path) -> None:
        assert FileSuite({}, tmp_path).instances() == []
