"""Systems of non-congruences, with verdicts from a residue count."""

from wpa_core.generators import noncongruence_instance, noncongruence_satisfiable, parse_constraints
from wpa_core.plugin import BenchInstance, BenchSuite

DEFAULT_SYSTEMS = ('2:0', '2:0,3:1', '2:0,2:1', '3:0,3:1,3:2', '2:1,3:0,5:4')


class NonCongruenceSuite(BenchSuite):
    """Options:
    systems: list of ``m1:r1,m2:r2,...`` strings.
    """

    def name(self) -> str:
        return 'noncong'

    def instances(self) -> list[BenchInstance]:
        result = []
        for spec in self.options.get('systems', DEFAULT_SYSTEMS):
            constraints = parse_constraints(spec)
            result.append(
                BenchInstance(
                    spec,
                    noncongruence_instance(constraints),
                    noncongruence_satisfiable(constraints),
                    len(constraints),
                )
            )
        return result
