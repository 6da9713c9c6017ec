"""Formulas read from ``*.wpa`` files in a directory."""

import re

from wpa_core.plugin import BenchInstance, BenchSuite

_EXPECT = re.compile(r'^\s*#\s*expect:\s*(sat|unsat)\s*$', re.MULTILINE)


class FileSuite(BenchSuite):
    """Options:
    path: directory of formula files, relative to the config file.
    name: suite name, default ``files``.

    A line ``# expect: sat`` or ``# expect: unsat`` in a file records its verdict.
    """

    def name(self) -> str:
        return self.options.get('name', 'files')

    def instances(self) -> list[BenchInstance]:
        directory = self.resolve_path(self.options.get('path', '.'))
        result = []
        for path in sorted(directory.glob('*.wpa')):
            text = path.read_text(encoding='utf-8')
            match = _EXPECT.search(text)
            expected = None if match is None else match.group(1) == 'sat'
            result.append(BenchInstance(path.stem, text, expected, len(text.splitlines())))
        return result
