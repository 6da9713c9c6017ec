"""Finite unions of shifted lattices and the exact inclusion test between them."""

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from wpa_core.intlin import det_of_basis
from wpa_core.lattice import (
    LatticeError,
    ShiftedLattice,
    add_periods,
    count_points_in_fundamental_box,
    drop_project,
    full,
    intersect,
    is_subset,
    lattice_part,
    member,
    orthogonal,
    pad_to_dim,
    permute,
)


@dataclass(frozen=True, slots=True)
class LatticeUnion:
    """Union of nonempty shifted lattices of a common dimension. No cell is EMPTY."""

    dim: int
    cells: tuple[ShiftedLattice, ...] = ()

    def __post_init__(self):
        for cell in self.cells:
            if cell.dim != self.dim:
                raise LatticeError(f'cell in Z^{cell.dim} inside a union over Z^{self.dim}')
            if cell.is_empty:
                raise LatticeError('EMPTY cell stored in a union')

    @classmethod
    def of(cls, cells: Iterable[ShiftedLattice], dim: int) -> 'LatticeUnion':
        """Union from arbitrary cells: EMPTY cells are dropped, duplicates and absorbed cells removed."""
        return cls(dim, _cleanup(c for c in cells if not c.is_empty))

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def __str__(self) -> str:
        if not self.cells:
            return f'EMPTY^{self.dim}'
        return ' | '.join(str(c) for c in self.cells)


def _cleanup(cells: Iterable[ShiftedLattice]) -> tuple[ShiftedLattice, ...]:
    kept: list[ShiftedLattice] = []
    for cell in cells:
        if any(is_subset(cell, other) for other in kept):
            continue
        kept = [other for other in kept if not is_subset(other, cell)]
        kept.append(cell)
    return tuple(kept)


def union_empty(dim: int) -> LatticeUnion:
    return LatticeUnion(dim, ())


def union_full(dim: int) -> LatticeUnion:
    return LatticeUnion(dim, (full(dim),))


def union_pad(x: LatticeUnion, m: int) -> LatticeUnion:
    if m == x.dim:
        return x
    return LatticeUnion(m, tuple(pad_to_dim(c, m) for c in x.cells))


def union_equalize(x: LatticeUnion, y: LatticeUnion) -> tuple[LatticeUnion, LatticeUnion]:
    d = max(x.dim, y.dim)
    return union_pad(x, d), union_pad(y, d)


def union_join(x: LatticeUnion, y: LatticeUnion) -> LatticeUnion:
    x, y = union_equalize(x, y)
    return LatticeUnion.of(x.cells + y.cells, x.dim)


def union_meet(x: LatticeUnion, y: LatticeUnion) -> LatticeUnion:
    x, y = union_equalize(x, y)
    return LatticeUnion.of((intersect(a, b) for a in x.cells for b in y.cells), x.dim)


def union_member(x: LatticeUnion, p: Sequence[int]) -> bool:
    return any(member(c, p) for c in x.cells)


def union_permute(x: LatticeUnion, order: Sequence[int]) -> LatticeUnion:
    return LatticeUnion.of((permute(c, order) for c in x.cells), x.dim)


def union_drop(x: LatticeUnion, k: int) -> LatticeUnion:
    return LatticeUnion.of((drop_project(c, k) for c in x.cells), x.dim - k)


def _covered(cell: ShiftedLattice, cover: Sequence[ShiftedLattice]) -> bool:
    # Inclusion-exclusion over the cover cells of full rank relative to ``cell``, widened by the
    # orthogonal complement so that every set is full-dimensional and counts become densities.
    complement = orthogonal(lattice_part(cell))
    widened_cell = add_periods(cell, complement)
    widened = []
    for other in cover:
        meet = intersect(other, cell)
        if not meet.is_empty and meet.rank == cell.rank:
            widened.append(add_periods(meet, complement))
    if not widened:
        return False
    side = det_of_basis(widened_cell.period_matrix()) * prod(det_of_basis(w.period_matrix()) for w in widened)
    reference = count_points_in_fundamental_box(widened_cell, side)
    total = Fraction(0)
    meets: dict[int, ShiftedLattice] = {}
    for mask in range(1, 1 << len(widened)):
        low = mask & -mask
        index = low.bit_length() - 1
        rest = mask ^ low
        current = widened[index] if not rest else intersect(meets[rest], widened[index])
        meets[mask] = current
        if current.is_empty:
            continue
        sign = 1 if mask.bit_count() % 2 else -1
        total += sign * Fraction(count_points_in_fundamental_box(current, side), reference)
    return total == 1


def union_subset(x: LatticeUnion, y: LatticeUnion) -> bool:
    """Exact test ``x ⊆ y``, decided cell by cell with an inclusion-exclusion density count."""
    x, y = union_equalize(x, y)
    return all(_covered(cell, y.cells) for cell in x.cells)


def union_equal(x: LatticeUnion, y: LatticeUnion) -> bool:
    return union_subset(x, y) and union_subset(y, x)
