"""Fixed-weight instances of growing size, for the t(2n)/t(n) ratio."""

from wpa_core.generators import chain_instance
from wpa_core.plugin import BenchInstance, BenchSuite

DEFAULT_SIZES = (5, 10, 20, 40)


class ScalingSuite(BenchSuite):
    """Weight-2 formulas with ``n`` free variables and ``n`` equations.

    Options:
        sizes: list of instance sizes, default ``[5, 10, 20, 40]``.
    """

    def name(self) -> str:
        return 'scaling'

    def instances(self) -> list[BenchInstance]:
        sizes = sorted(int(n) for n in self.options.get('sizes', DEFAULT_SIZES))
        # an odd last variable falsifies every antecedent, so each instance is satisfiable
        return [BenchInstance(f'chain-{n}', chain_instance(n), True, n) for n in sizes]
