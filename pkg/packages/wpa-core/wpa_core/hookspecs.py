"""Pluggy hook specifications for wpa."""

import pluggy

from wpa_core.plugin import BenchSuite

hookspec = pluggy.HookspecMarker('wpa')
hookimpl = pluggy.HookimplMarker('wpa')


class WpaSpecs:
    """Hook specifications for wpa benchmark suites."""

    @hookspec
    def register_suites(self) -> list[BenchSuite]:  # pyright: ignore[reportReturnType]
        """Return a list of benchmark suite instances."""
