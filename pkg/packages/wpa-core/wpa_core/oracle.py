"""Brute-force semantics over bounded boxes, used to cross-check the solver."""

import logging
from itertools import product
from math import lcm
from typing import Iterator, NamedTuple, Sequence

from wpa_core.frontend import And, Atom, Exists, Forall, Formula, Implies, Not, Or, Term, VariableMap
from wpa_core.intlin import Vector
from wpa_core.sdf import DnfChain, chain_member

logger = logging.getLogger(__name__)

# range of each quantifier nesting level, outermost first; deeper levels reuse the last entry
QuantifierRanges = int | Sequence[int]


class Agreement(NamedTuple):
    points: int


class Mismatch(NamedTuple):
    point: Vector
    solver: bool
    oracle: bool


class Skipped(NamedTuple):
    reason: str


CheckOutcome = Agreement | Mismatch | Skipped


def _value(t: Term, env: dict[str, int]) -> int:
    return t.constant + sum(c * env[name] for name, c in t.coefficients)


def _range_at(qbox: QuantifierRanges, level: int) -> int:
    if isinstance(qbox, int):
        return qbox
    return qbox[min(level, len(qbox) - 1)]


def holds(f: Formula, env: dict[str, int], qbox: QuantifierRanges, level: int = 0) -> bool:
    """Truth of ``f`` under ``env``.

    A quantifier nested under ``level`` others ranges over ``[-r, r]`` for ``r`` the entry of
    ``qbox`` at that level; a plain integer is the same range at every level.
    """
    match f:
        case Atom(lhs, rhs):
            return _value(lhs, env) == _value(rhs, env)
        case Not(body):
            return not holds(body, env, qbox, level)
        case And(left, right):
            return holds(left, env, qbox, level) and holds(right, env, qbox, level)
        case Or(left, right):
            return holds(left, env, qbox, level) or holds(right, env, qbox, level)
        case Implies(left, right):
            return not holds(left, env, qbox, level) or holds(right, env, qbox, level)
        case Exists(var, body):
            r = _range_at(qbox, level)
            return any(holds(body, env | {var: a}, qbox, level + 1) for a in range(-r, r + 1))
        case Forall(var, body):
            r = _range_at(qbox, level)
            return all(holds(body, env | {var: a}, qbox, level + 1) for a in range(-r, r + 1))
    raise TypeError(f'not a formula: {f!r}')


def _atoms(f: Formula) -> Iterator[Atom]:
    match f:
        case Atom():
            yield f
        case Not(body) | Exists(_, body) | Forall(_, body):
            yield from _atoms(body)
        case And(left, right) | Or(left, right) | Implies(left, right):
            yield from _atoms(left)
            yield from _atoms(right)
        case _:
            raise TypeError(f'not a formula: {f!r}')


def _quantifier_bodies(f: Formula, level: int = 0) -> Iterator[tuple[int, Formula]]:
    match f:
        case Atom():
            return
        case Not(body):
            yield from _quantifier_bodies(body, level)
        case Exists(_, body) | Forall(_, body):
            yield level, body
            yield from _quantifier_bodies(body, level + 1)
        case And(left, right) | Or(left, right) | Implies(left, right):
            yield from _quantifier_bodies(left, level)
            yield from _quantifier_bodies(right, level)
        case _:
            raise TypeError(f'not a formula: {f!r}')


def quantifier_depth(f: Formula) -> int:
    return max((level + 1 for level, _ in _quantifier_bodies(f)), default=0)


class _LevelBound(NamedTuple):
    scale: int
    constant: int
    period: int


def _level_bound(body: Formula) -> _LevelBound:
    scale, constant, period = 0, 0, 1
    for atom in _atoms(body):
        coefficients = [abs(c) for _, c in atom.lhs.coefficients + atom.rhs.coefficients]
        scale = max(scale, sum(coefficients))
        constant = max(constant, abs(atom.rhs.constant - atom.lhs.constant))
        period = lcm(period, *(c for c in coefficients if c))
    return _LevelBound(scale, constant, period)


def derive_quantifier_ranges(f: Formula, box: int) -> tuple[int, ...]:
    """Range of each quantifier nesting level for checking points of ``[-box, box]^n``.

    With ``s`` the largest sum of absolute coefficients of an atom below a level, ``c`` the largest
    absolute constant and ``l`` the lcm of the nonzero coefficients, a level whose enclosing values
    lie in ``[-r, r]`` gets the range ``s * r + c + l``: wide enough for a witness solving one
    equation for the bound variable, plus one full period of the residues the equation fixes.
    Inner ranges are derived from the enclosing one, so witnesses computed from outer values stay in range.
    """
    bounds: dict[int, _LevelBound] = {}
    for level, body in _quantifier_bodies(f):
        found = _level_bound(body)
        if level in bounds:
            old = bounds[level]
            found = _LevelBound(
                max(old.scale, found.scale), max(old.constant, found.constant), lcm(old.period, found.period)
            )
        bounds[level] = found
    ranges: list[int] = []
    outer = box
    for level in range(len(bounds)):
        b = bounds[level]
        outer = b.scale * outer + b.constant + b.period
        ranges.append(outer)
    return tuple(ranges)


def compare(
    f: Formula,
    chain: DnfChain,
    variables: VariableMap,
    box: int,
    qbox: QuantifierRanges | None = None,
    max_qbox: int = 60,
) -> CheckOutcome:
    """Compare chain membership with brute-force truth on every point of ``[-box, box]^dim``.

    Without an explicit ``qbox`` the ranges come from ``derive_quantifier_ranges`` and the check is
    skipped when the widest of them exceeds ``max_qbox``.
    """
    if qbox is None:
        ranges = derive_quantifier_ranges(f, box)
        widest = max(ranges, default=0)
        if widest > max_qbox:
            return Skipped(f'derived quantifier range {widest} exceeds {max_qbox}')
        qbox = ranges or 0
    logger.debug(f'checking [-{box}, {box}]^{chain.dim} with quantifier ranges {qbox}')
    names = {i: variables.name(i) for i in range(1, chain.dim + 1)}
    count = 0
    for p in product(range(-box, box + 1), repeat=chain.dim):
        env = {names[i + 1]: v for i, v in enumerate(p)}
        expected = holds(f, env, qbox)
        actual = chain_member(chain, p)
        count += 1
        if expected != actual:
            return Mismatch(p, actual, expected)
    return Agreement(count)
