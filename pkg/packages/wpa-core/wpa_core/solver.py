"""Bottom-up evaluation of core formulas into chains, satisfiability and witness search."""

import logging
from itertools import product
from math import lcm
from typing import NamedTuple, Sequence

from returns.result import Result, Success, safe

from wpa_core.config import SolverConfig
from wpa_core.frontend import (
    And,
    Atom,
    Exists,
    Formula,
    FormulaError,
    Not,
    Or,
    VariableMap,
    assign_variables,
    desugar_and_weigh,
    parse,
)
from wpa_core.intlin import IntMatrix, Vector, det_of_basis, solve_system
from wpa_core.lattice import ShiftedLattice, full, intersect, member, shifted_lattice
from wpa_core.sdf import (
    BoolOp,
    DnfChain,
    chain_bool,
    chain_decreasing,
    chain_empty,
    chain_leq,
    chain_member,
    chain_of_union,
    chain_pad,
    chain_top,
    chain_truncate,
)
from wpa_core.serialize import chain_from_json, chain_to_json
from wpa_core.unions import LatticeUnion, union_subset
from wpa_core.universal import chain_project, chain_unproj

logger = logging.getLogger(__name__)


class SolverError(Exception):
    """Base class for solver errors."""


class BudgetExceededError(SolverError):
    """Raised when a formula has more negations than the configured cap."""

    def __init__(self, weight: int, max_neg: int):
        super().__init__(f'formula has {weight} negations, more than the allowed {max_neg}')
        self.weight = weight
        self.max_neg = max_neg


class SearchExhaustedError(SolverError):
    """Raised when the witness search examines more candidates than its cap."""

    def __init__(self, cap: int):
        super().__init__(f'witness search gave up after {cap} candidate points')
        self.cap = cap


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------


def _equation_row(atom: Atom, nvars: int, variables: VariableMap) -> tuple[list[int], int]:
    row = [0] * nvars
    for name, c in atom.lhs.coefficients:
        row[variables.index(name) - 1] += c
    for name, c in atom.rhs.coefficients:
        row[variables.index(name) - 1] -= c
    return row, atom.rhs.constant - atom.lhs.constant


def conjunction_to_lattice(
    atoms: Sequence[Atom], nvars: int, variables: VariableMap | None = None
) -> ShiftedLattice:
    """Solution set in ``Z^nvars`` of a conjunction of equations, from a single integer system."""
    if not atoms:
        return full(nvars)
    if variables is None:
        variables = assign_variables(atoms[0] if len(atoms) == 1 else _conjoin(atoms))
    rows, rhs = zip(*(_equation_row(a, nvars, variables) for a in atoms))
    solution = solve_system(IntMatrix.from_rows(rows, nvars), rhs)
    if solution is None:
        return ShiftedLattice(nvars, None, ())
    return shifted_lattice(solution.base, solution.periods)


def atom_to_lattice(atom: Atom, nvars: int, variables: VariableMap | None = None) -> ShiftedLattice:
    return conjunction_to_lattice([atom], nvars, variables)


def _conjoin(parts: Sequence[Formula]) -> Formula:
    result = parts[0]
    for part in parts[1:]:
        result = And(result, part)
    return result


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


class Evaluator:
    """Evaluates core formulas; each node yields a chain over ``Z^n``, n its largest free index."""

    def __init__(self, variables: VariableMap, peephole: bool = True):
        self._variables = variables
        self._peephole = peephole
        self._free: dict[Formula, frozenset[int]] = {}

    def free(self, f: Formula) -> frozenset[int]:
        found = self._free.get(f)
        if found is not None:
            return found
        match f:
            case Atom(lhs, rhs):
                found = frozenset(self._variables.index(n) for n, _ in lhs.coefficients + rhs.coefficients)
            case Not(body):
                found = self.free(body)
            case And(left, right) | Or(left, right):
                found = self.free(left) | self.free(right)
            case Exists(var, body):
                found = self.free(body) - {self._variables.index(var)}
            case _:
                raise TypeError(f'not a core formula: {f!r}')
        self._free[f] = found
        return found

    def dim_of(self, f: Formula) -> int:
        return max(self.free(f), default=0)

    def evaluate(self, f: Formula) -> DnfChain:
        match f:
            case Atom():
                n = self.dim_of(f)
                result = chain_of_union(LatticeUnion.of((atom_to_lattice(f, n, self._variables),), n))
            case And():
                result = self._conjunction(f)
            case Or(left, right):
                result = chain_bool(BoolOp.OR, self.evaluate(left), self.evaluate(right))
            case Not(Exists(var, Not(body))) if self._peephole:
                result = self._universal(f, var, body)
            case Not(body):
                result = chain_bool(BoolOp.MINUS, chain_top(self.dim_of(body)), self.evaluate(body))
            case Exists(var, body):
                result = self._existential(f, var, body)
            case _:
                raise TypeError(f'not a core formula: {f!r}')
        logger.debug(f'{type(f).__name__} over Z^{result.dim}: {len(result.links)} links')
        return result

    def _conjunction(self, f: And) -> DnfChain:
        parts: list[Formula] = []
        stack: list[Formula] = [f]
        while stack:
            node = stack.pop()
            if isinstance(node, And):
                stack.extend((node.right, node.left))
            else:
                parts.append(node)
        atoms = [p for p in parts if isinstance(p, Atom)]
        result: DnfChain | None = None
        if atoms:
            n = max(self.dim_of(a) for a in atoms)
            result = chain_of_union(LatticeUnion.of((conjunction_to_lattice(atoms, n, self._variables),), n))
        for part in parts:
            if isinstance(part, Atom):
                continue
            chain = self.evaluate(part)
            result = chain if result is None else chain_bool(BoolOp.AND, result, chain)
        return result

    def _existential(self, f: Formula, var: str, body: Formula) -> DnfChain:
        index = self._variables.index(var)
        if index not in self.free(body):
            return self.evaluate(body)
        return chain_truncate(chain_project((index,), self.evaluate(body)), self.dim_of(f))

    def _universal(self, f: Formula, var: str, body: Formula) -> DnfChain:
        index = self._variables.index(var)
        if index not in self.free(body):
            return self.evaluate(body)
        return chain_truncate(chain_unproj((index,), self.evaluate(body)), self.dim_of(f))


def evaluate(f: Formula, variables: VariableMap | None = None, peephole: bool = True) -> DnfChain:
    """Chain denoting the solution set of a core formula over ``Z^n``, n the largest free index."""
    if variables is None:
        variables = assign_variables(f)
    chain = Evaluator(variables, peephole).evaluate(f)
    return chain_pad(chain, max(chain.dim, variables.dim))


def is_satisfiable(u: DnfChain) -> bool:
    return not chain_leq(u, chain_empty(u.dim))


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


class _WitnessSearch:
    """Finds a point of ``c1 - (c2 - (c3 - ...))`` for a decreasing chain.

    The set is ``(c1 - c2) ∪ [[c3 - ...]]``, so the tail is searched first and then the head
    cells one by one against the cells of ``c2``.
    """

    def __init__(self, cap: int):
        self._cap = cap
        self._examined = 0

    def _tick(self):
        self._examined += 1
        if self._examined > self._cap:
            raise SearchExhaustedError(self._cap)

    def find(self, links: Sequence[LatticeUnion]) -> Vector | None:
        if not links:
            return None
        deeper = self.find(links[2:])
        if deeper is not None:
            return deeper
        cover = links[1].cells if len(links) > 1 else ()
        for cell in links[0].cells:
            found = self._outside(cell, cover)
            if found is not None:
                return found
        return None

    def _outside(self, cell: ShiftedLattice, cover: Sequence[ShiftedLattice]) -> Vector | None:
        if union_subset(LatticeUnion(cell.dim, (cell,)), LatticeUnion(cell.dim, tuple(cover))):
            return None
        periods = cell.period_matrix()
        r = cell.rank
        full_rank: list[ShiftedLattice] = []
        lower: list[ShiftedLattice] = []
        for other in cover:
            meet = intersect(cell, other)
            if meet.is_empty:
                continue
            # coordinates of the meet with respect to the periods of the cell
            base = solve_system(periods, tuple(a - b for a, b in zip(meet.base, cell.base))).base
            steps = tuple(solve_system(periods, q).base for q in meet.periods)
            pulled = shifted_lattice(base, steps)
            (full_rank if pulled.rank == r else lower).append(pulled)
        side = lcm(1, *(det_of_basis(s.period_matrix()) for s in full_rank))
        # each lower-rank piece meets a grid with len(lower) + 1 points per axis in at most
        # (len(lower) + 1)^(r - 1) points, so the grid over a free residue class always has a witness
        steps_per_axis = len(lower) + 1
        for residue in product(range(side), repeat=r):
            self._tick()
            if any(member(s, residue) for s in full_rank):
                continue
            for shift in product(range(steps_per_axis), repeat=r):
                self._tick()
                y = tuple(a + side * t for a, t in zip(residue, shift))
                if not any(member(s, y) for s in lower):
                    return tuple(b + v for b, v in zip(cell.base, periods.apply(y)))
        return None


def extract_witness(u: DnfChain, cap: int = 200_000) -> Vector | None:
    """A verified point of ``[[u]]``, or None when it is empty.

    Raises:
        SearchExhaustedError: If more than ``cap`` candidate points would be examined.
    """
    found = _WitnessSearch(cap).find(chain_decreasing(u).links)
    if found is not None and not chain_member(u, found):
        raise SolverError(f'witness candidate {found} failed membership verification')
    return found


def solution_set_json(u: DnfChain) -> str:
    return chain_to_json(u)


def solution_set_from_json(text: str) -> DnfChain:
    return chain_from_json(text)


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


class Solution(NamedTuple):
    formula: Formula
    core: Formula
    weight: int
    variables: VariableMap
    chain: DnfChain
    satisfiable: bool
    witness: Vector | None


@safe(exceptions=(FormulaError,))
def _parse(text: str) -> Formula:
    return parse(text)


@safe(exceptions=(SolverError,))
def _decide(formula: Formula, options: SolverConfig, want_witness: bool) -> Solution:
    core, weight = desugar_and_weigh(formula)
    if options.max_neg is not None and weight > options.max_neg:
        raise BudgetExceededError(weight, options.max_neg)
    variables = assign_variables(formula)
    logger.info(f'weight {weight}, {len(variables.free)} free variables, solution set over Z^{variables.dim}')
    chain = evaluate(core, variables, options.peephole)
    satisfiable = is_satisfiable(chain)
    logger.debug(f'solution chain has {len(chain.links)} links')
    witness = extract_witness(chain, options.witness_cap) if want_witness and satisfiable else None
    return Solution(formula, core, weight, variables, chain, satisfiable, witness)


def solve(
    source: str | Formula, options: SolverConfig | None = None, witness: bool = False
) -> Result[Solution, FormulaError | SolverError]:
    """Parse, desugar, check the negation budget, evaluate and decide.

    Returns:
        Success with the Solution, or Failure holding the FormulaError or SolverError raised
        along the way.
    """
    options = options or SolverConfig()
    parsed = _parse(source) if isinstance(source, str) else Success(source)
    return parsed.bind(lambda f: _decide(f, options, witness))
