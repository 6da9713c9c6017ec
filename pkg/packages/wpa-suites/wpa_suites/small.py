"""Hand-picked formulas with known verdicts."""

from wpa_core.plugin import BenchInstance, BenchSuite

SMALL_INSTANCES: tuple[BenchInstance, ...] = (
    BenchInstance('even', 'E y. x = 2*y', True, 1),
    BenchInstance('successor-fixpoint', 'E x1. x1 = x1 + 1', False, 1),
    BenchInstance('odd-by-noncongruence', 'A y. (x = 2*y -> y = 3*x + 1)', True, 1),
    BenchInstance('parity-clash', 'E x1. E x2. x1 = 2*x2 & x1 = 2*x2 + 1', False, 2),
    BenchInstance('every-integer-has-parity', 'A x. E y. x = 2*y | x = 2*y + 1', True, 2),
    BenchInstance('every-integer-even', 'A x. E y. x = 2*y', False, 2),
    BenchInstance('gcd-obstruction', 'E x. E y. 2*x + 4*y = 3', False, 2),
    BenchInstance('crt-pair', 'E y. E z. x = 6*y & x = 9*z + 3', True, 3),
    BenchInstance('self-inequality', '!(x = x)', False, 1),
    BenchInstance(
        'neither-even-nor-odd',
        'A y. ((x = 2*y -> y = 3*x + 1) & (x - 1 = 2*y -> y = 3*x + 1))',
        False,
        2,
    ),
)


class SmallSuite(BenchSuite):
    """Sanity suite; every verdict is known."""

    def name(self) -> str:
        return 'small'

    def instances(self) -> list[BenchInstance]:
        return list(SMALL_INSTANCES)
