"""Formula generators for stress and scaling instances."""

from math import lcm
from typing import Iterable, NamedTuple


class GeneratorError(Exception):
    """Base class for instance generator errors."""


class BadModulusError(GeneratorError):
    """Raised for a modulus below 2 or a residue outside ``[0, m)``."""


class NonCongruence(NamedTuple):
    modulus: int
    residue: int


def parse_constraints(text: str) -> list[NonCongruence]:
    """Parse ``m1:r1,m2:r2,...``."""
    constraints = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        modulus, sep, residue = item.partition(':')
        try:
            constraints.append(NonCongruence(int(modulus), int(residue) if sep else 0))
        except ValueError as e:
            raise GeneratorError(f'cannot read constraint {item!r}') from e
    if not constraints:
        raise GeneratorError('no constraints given')
    return constraints


def _implication(c: NonCongruence) -> str:
    lhs = 'x' if c.residue == 0 else f'x - {c.residue}'
    return f'{lhs} = {c.modulus}*y -> y = 3*x + 1'


def noncongruence_instance(constraints: Iterable[NonCongruence | tuple[int, int]]) -> str:
    """Formula stating ``x != r_i (mod m_i)`` for every constraint.

    ``x != r (mod m)`` holds iff every ``y`` with ``x - r = m*y`` also satisfies ``y = 3*x + 1``,
    which no integer ``x`` can when ``m >= 2``.

    Raises:
        BadModulusError: If some ``m < 2`` or ``r`` is outside ``[0, m)``.
    """
    items = [NonCongruence(*c) for c in constraints]
    if not items:
        raise GeneratorError('no constraints given')
    for c in items:
        if c.modulus < 2 or not 0 <= c.residue < c.modulus:
            raise BadModulusError(f'need m >= 2 and 0 <= r < m, got m={c.modulus}, r={c.residue}')
    if len(items) == 1:
        return f'A y. ({_implication(items[0])})'
    return 'A y. (' + ' & '.join(f'({_implication(c)})' for c in items) + ')'


def noncongruence_satisfiable(constraints: Iterable[NonCongruence | tuple[int, int]]) -> bool:
    """Whether some integer avoids every residue class, checked over one common period."""
    items = [NonCongruence(*c) for c in constraints]
    period = lcm(*(c.modulus for c in items))
    return any(all(x % c.modulus != c.residue for c in items) for x in range(period))


def chain_instance(n: int) -> str:
    """Weight-2 formula over ``n`` free variables with ``n`` equations under one universal quantifier."""
    if n < 1:
        raise GeneratorError(f'size must be positive, got {n}')
    equations = [f'x{i} = x{i + 1} + {i}' for i in range(1, n)] + [f'x{n} = 2*y']
    return f'A y. (({" & ".join(equations)}) -> y = 3*x1 + 1)'
