"""Shifted lattices ``v0 + span_Z(periods)`` in canonical form, and the operations on them."""

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from wpa_core.intlin import (
    IntMatrix,
    Vector,
    column_span_basis,
    det_of_basis,
    ext_gcd_chain,
    solve_system,
)


class LatticeError(Exception):
    """Base class for shifted lattice errors."""


class IndexOutOfRangeError(LatticeError):
    """Raised when a coordinate index falls outside ``1..dim`` or is repeated."""


class ShrinkForbiddenError(LatticeError):
    """Raised when padding would reduce the dimension."""


class NonzeroBaseError(LatticeError):
    """Raised when an operation that needs a lattice gets a proper shift."""


class EmptyInputError(LatticeError):
    """Raised when an operation that needs a nonempty set gets EMPTY."""


class PreconditionViolationError(LatticeError):
    """Raised when a documented precondition does not hold."""


@dataclass(frozen=True, slots=True)
class ShiftedLattice:
    """A set ``base + span_Z(periods)`` in ``Z^dim``.

    ``base is None`` stands for the empty set. Instances built through this module are
    canonical: periods are the Hermite basis of the lattice part and the base is the unique
    reduced representative, so ``==`` is set equality.
    """

    dim: int
    base: Vector | None
    periods: tuple[Vector, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def rank(self) -> int:
        return len(self.periods)

    def period_matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.periods, self.dim)

    def __str__(self) -> str:
        if self.base is None:
            return f'EMPTY^{self.dim}'
        if not self.periods:
            return str(self.base)
        return f'{self.base} + <{", ".join(str(p) for p in self.periods)}>'


IndexSet = tuple[int, ...]


def _pivot_row(column: Vector) -> int:
    return next(i for i, v in enumerate(column) if v)


def _combination(vectors: Sequence[Vector], coefficients: Sequence[int], dim: int) -> Vector:
    out = [0] * dim
    for c, v in zip(coefficients, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def canonicalize(x: ShiftedLattice) -> ShiftedLattice:
    """Hermite basis for the periods and the reduced base point.

    The base is reduced against the pivots in increasing order so that each pivot coordinate
    of the base lies in ``[0, pivot)``.
    """
    if x.base is None:
        return ShiftedLattice(x.dim, None, ())
    basis = column_span_basis(x.period_matrix()).columns()
    base = list(x.base)
    for col in basis:
        row = _pivot_row(col)
        q = base[row] // col[row]
        if q:
            base = [b - q * c for b, c in zip(base, col)]
    return ShiftedLattice(x.dim, tuple(base), basis)


def shifted_lattice(base: Sequence[int], periods: Iterable[Sequence[int]] = ()) -> ShiftedLattice:
    """Canonical shifted lattice from a base point and arbitrary period vectors."""
    dim = len(base)
    cols = tuple(tuple(int(v) for v in p) for p in periods)
    for p in cols:
        if len(p) != dim:
            raise LatticeError(f'period {p} does not live in Z^{dim}')
    return canonicalize(ShiftedLattice(dim, tuple(int(v) for v in base), cols))


def empty(dim: int) -> ShiftedLattice:
    return ShiftedLattice(dim, None, ())


def full(dim: int) -> ShiftedLattice:
    return ShiftedLattice(dim, (0,) * dim, tuple(tuple(int(i == j) for i in range(dim)) for j in range(dim)))


def point(v: Sequence[int]) -> ShiftedLattice:
    return ShiftedLattice(len(v), tuple(int(c) for c in v), ())


def dim_lattice(x: ShiftedLattice) -> int:
    """Number of periods; -1 for EMPTY."""
    return -1 if x.base is None else x.rank


def is_full_dimensional(x: ShiftedLattice) -> bool:
    return x.base is not None and x.rank == x.dim


def lattice_part(x: ShiftedLattice) -> ShiftedLattice:
    """The lattice ``L`` of ``v0 + L`` as a zero-based shifted lattice."""
    if x.base is None:
        raise EmptyInputError('EMPTY has no lattice part')
    return ShiftedLattice(x.dim, (0,) * x.dim, x.periods)


def add_periods(x: ShiftedLattice, vectors: Iterable[Sequence[int]]) -> ShiftedLattice:
    if x.base is None:
        return x
    return canonicalize(ShiftedLattice(x.dim, x.base, x.periods + tuple(tuple(v) for v in vectors)))


def member(x: ShiftedLattice, p: Sequence[int]) -> bool:
    if x.base is None:
        return False
    if len(p) != x.dim:
        raise LatticeError(f'point of length {len(p)} tested against a lattice in Z^{x.dim}')
    return solve_system(x.period_matrix(), _sub(p, x.base)) is not None


def pad_to_dim(x: ShiftedLattice, m: int) -> ShiftedLattice:
    """Cylinder ``x x Z^(m - dim)``."""
    if m < x.dim:
        raise ShrinkForbiddenError(f'cannot pad Z^{x.dim} down to Z^{m}')
    if m == x.dim:
        return x
    extra = m - x.dim
    if x.base is None:
        return empty(m)
    periods = tuple(p + (0,) * extra for p in x.periods)
    periods += tuple((0,) * x.dim + tuple(int(i == j) for i in range(extra)) for j in range(extra))
    return canonicalize(ShiftedLattice(m, x.base + (0,) * extra, periods))


def equalize(x: ShiftedLattice, y: ShiftedLattice) -> tuple[ShiftedLattice, ShiftedLattice]:
    d = max(x.dim, y.dim)
    return pad_to_dim(x, d), pad_to_dim(y, d)


def intersect(x: ShiftedLattice, y: ShiftedLattice) -> ShiftedLattice:
    """Set intersection; operands of different dimensions are padded first."""
    x, y = equalize(x, y)
    if x.base is None or y.base is None:
        return empty(x.dim)
    k = x.rank
    columns = list(x.periods) + [tuple(-c for c in col) for col in y.periods]
    system = IntMatrix.from_columns(columns, x.dim)
    solution = solve_system(system, _sub(y.base, x.base))
    if solution is None:
        return empty(x.dim)
    base = _add(x.base, _combination(x.periods, solution.base[:k], x.dim))
    periods = tuple(_combination(x.periods, p[:k], x.dim) for p in solution.periods)
    return canonicalize(ShiftedLattice(x.dim, base, periods))


def is_subset(x: ShiftedLattice, y: ShiftedLattice) -> bool:
    x, y = equalize(x, y)
    if x.base is None:
        return True
    if y.base is None:
        return False
    lattice = lattice_part(y)
    return member(y, x.base) and all(member(lattice, p) for p in x.periods)


def equal(x: ShiftedLattice, y: ShiftedLattice) -> bool:
    x, y = equalize(x, y)
    return canonicalize(x) == canonicalize(y)


def drop_project(x: ShiftedLattice, k: int) -> ShiftedLattice:
    """Existential projection removing the last ``k`` coordinates."""
    if not 0 <= k <= x.dim:
        raise IndexOutOfRangeError(f'cannot drop {k} coordinates from Z^{x.dim}')
    kept = x.dim - k
    if x.base is None:
        return empty(kept)
    return canonicalize(ShiftedLattice(kept, x.base[:kept], tuple(p[:kept] for p in x.periods)))


def check_indices(indices: Iterable[int], dim: int) -> IndexSet:
    """Validate 1-based coordinate indices and return them sorted."""
    seen = tuple(indices)
    result = tuple(sorted(set(seen)))
    if len(result) != len(seen):
        raise IndexOutOfRangeError(f'repeated coordinate in {seen}')
    for i in result:
        if not 1 <= i <= dim:
            raise IndexOutOfRangeError(f'coordinate {i} outside 1..{dim}')
    return result


def suffix_order(indices: IndexSet, dim: int) -> tuple[int, ...]:
    """0-based permutation moving the chosen coordinates to the end, others keeping their order."""
    chosen = {i - 1 for i in indices}
    return tuple(j for j in range(dim) if j not in chosen) + tuple(i - 1 for i in indices)


def inverse_order(order: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(order)
    for t, o in enumerate(order):
        inverse[o] = t
    return tuple(inverse)


def permute(x: ShiftedLattice, order: Sequence[int]) -> ShiftedLattice:
    """Reorder coordinates: coordinate ``t`` of the result is coordinate ``order[t]`` of ``x``."""
    if sorted(order) != list(range(x.dim)):
        raise IndexOutOfRangeError(f'{tuple(order)} is not a permutation of 0..{x.dim - 1}')
    if x.base is None:
        return x
    base = tuple(x.base[o] for o in order)
    periods = tuple(tuple(p[o] for o in order) for p in x.periods)
    return canonicalize(ShiftedLattice(x.dim, base, periods))


def project_indices(x: ShiftedLattice, indices: Iterable[int]) -> ShiftedLattice:
    """Existential projection over 1-based coordinates, as a cylinder in the same dimension."""
    chosen = check_indices(indices, x.dim)
    if not chosen:
        return x
    order = suffix_order(chosen, x.dim)
    dropped = drop_project(permute(x, order), len(chosen))
    return permute(pad_to_dim(dropped, x.dim), inverse_order(order))


def _orthogonal_of_vector(v: Vector) -> list[Vector]:
    d = len(v)
    first = _pivot_row(v)
    order = (first,) + tuple(j for j in range(d) if j != first)
    u = tuple(v[o] for o in order)
    steps = ext_gcd_chain(u)
    family = []
    for j in range(d - 1):
        g_j, g_next = steps[j].gcd, steps[j + 1].gcd
        beta = u[j + 1] // g_next
        vec = [-beta * a for a in steps[j].coefficients] + [g_j // g_next] + [0] * (d - j - 2)
        original = [0] * d
        for t, o in enumerate(order):
            original[o] = vec[t]
        family.append(tuple(original))
    return family


def orthogonal(x: ShiftedLattice) -> tuple[Vector, ...]:
    """Basis of the integer vectors orthogonal to every period of a lattice.

    Raises:
        EmptyInputError: If ``x`` is EMPTY.
        NonzeroBaseError: If ``x`` is not a lattice.
    """
    if x.base is None:
        raise EmptyInputError('orthogonal complement of EMPTY')
    if any(x.base):
        raise NonzeroBaseError(f'orthogonal complement needs a lattice, got base {x.base}')
    d = x.dim
    if not x.periods:
        return full(d).periods
    zero = (0,) * d
    if len(x.periods) == 1:
        return tuple(_orthogonal_of_vector(x.periods[0]))
    parts = (ShiftedLattice(d, zero, tuple(_orthogonal_of_vector(p))) for p in x.periods)
    return reduce(intersect, parts).periods


def slice_lattice(x: ShiftedLattice, k: int) -> ShiftedLattice:
    """The lattice ``L'`` such that every nonempty slice of ``x`` over its last ``k`` coordinates
    is a translate of ``L'``."""
    if x.base is None:
        raise EmptyInputError('slice lattice of EMPTY')
    if not 0 <= k <= x.dim:
        raise IndexOutOfRangeError(f'cannot slice {k} coordinates from Z^{x.dim}')
    kept = x.dim - k
    top = IntMatrix.from_columns([p[:kept] for p in x.periods], kept)
    kernel = solve_system(top, (0,) * kept)
    bottoms = [p[kept:] for p in x.periods]
    vectors = tuple(_combination(bottoms, y, k) for y in kernel.periods)
    return canonicalize(ShiftedLattice(k, (0,) * k, vectors))


def count_points_in_fundamental_box(x: ShiftedLattice, s: int) -> int:
    """Number of points of ``x`` in ``[0, s)^dim``, valid when ``s * Z^dim`` lies in its lattice."""
    if x.base is None:
        raise EmptyInputError('counting points of EMPTY')
    if s <= 0:
        raise PreconditionViolationError(f'box side must be positive, got {s}')
    lattice = lattice_part(x)
    for i in range(x.dim):
        if not member(lattice, tuple(s * int(i == j) for j in range(x.dim))):
            raise PreconditionViolationError(f'{s}*Z^{x.dim} is not contained in the lattice')
    return s**x.dim // det_of_basis(x.period_matrix())
