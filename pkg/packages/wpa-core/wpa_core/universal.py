"""Existential and universal projection of chains.

``rel_unproj`` computes the relative universal projection of a union ``X`` with respect to a shifted
lattice ``Z``: the points of the projection of ``Z`` whose whole slice of ``Z`` lies inside ``X``.
Chain projection is built on it, coordinates being moved to the end, projected away and padded back.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import prod
from typing import Iterable

from wpa_core.intlin import det_of_basis
from wpa_core.lattice import (
    ShiftedLattice,
    add_periods,
    check_indices,
    count_points_in_fundamental_box,
    drop_project,
    full,
    intersect,
    inverse_order,
    orthogonal,
    pad_to_dim,
    slice_lattice,
    suffix_order,
)
from wpa_core.sdf import (
    BOTTOM,
    BoolOp,
    DnfChain,
    PropChain,
    PropFormula,
    chain_bool,
    chain_decreasing,
    chain_empty,
    chain_of_links,
    chain_of_union,
    chain_pad,
    chain_permute,
    chain_top,
    prop_and,
    prop_conjunction,
    prop_cons,
    prop_join_all,
)
from wpa_core.unions import LatticeUnion, union_drop

logger = logging.getLogger(__name__)


def _admissible_families(weights: dict[int, Fraction], count: int) -> list[frozenset[int]]:
    """Downward-closed sets ``F`` of nonempty subset masks with ``sum(weights[J] for J in F) == 1``.

    Only masks present in ``weights`` (nonempty intersections) may be chosen. Masks are decided in
    increasing order, so every proper submask is already decided when a mask is reached.
    """
    masks = list(range(1, 1 << count))
    found: list[frozenset[int]] = []
    chosen: set[int] = set()

    def visit(position: int, total: Fraction):
        if position == len(masks):
            if total == 1:
                found.append(frozenset(chosen))
            return
        mask = masks[position]
        visit(position + 1, total)
        if mask not in weights:
            return
        bits = [1 << i for i in range(count) if mask >> i & 1]
        if len(bits) > 1 and any(mask ^ b not in chosen for b in bits):
            return
        chosen.add(mask)
        visit(position + 1, total + weights[mask])
        chosen.discard(mask)

    visit(0, Fraction(0))
    return found


def rel_unproj(z: ShiftedLattice, x: LatticeUnion, k: int) -> DnfChain:
    """Relative universal projection of ``x`` w.r.t. ``z`` over the last ``k`` coordinates.

    Returns the chain over ``Z^(dim - k)`` of points ``a`` in the projection of ``z`` such that every
    ``(a, b)`` in ``z`` also lies in ``x``.
    """
    d = max(z.dim, x.dim)
    z = pad_to_dim(z, d)
    if x.dim < d:
        x = LatticeUnion(d, tuple(pad_to_dim(c, d) for c in x.cells))
    kept = d - k
    if z.is_empty or x.is_empty:
        return chain_empty(kept)
    complement = tuple((0,) * kept + v for v in orthogonal(slice_lattice(z, k)))
    widened_z = add_periods(z, complement)
    cells = [add_periods(m, complement) for m in (intersect(c, z) for c in x.cells) if not m.is_empty]
    reference_slice = slice_lattice(widened_z, k)
    slices = [slice_lattice(c, k) for c in cells]
    full_rank = [c for c, s in zip(cells, slices) if s.rank == k]
    if not full_rank:
        return chain_empty(kept)
    full_slices = [s for s in slices if s.rank == k]
    side = det_of_basis(reference_slice.period_matrix()) * prod(
        det_of_basis(s.period_matrix()) for s in full_slices
    )
    reference = count_points_in_fundamental_box(reference_slice, side)
    meets: dict[int, ShiftedLattice] = {}
    weights: dict[int, Fraction] = {}
    for mask in range(1, 1 << len(full_rank)):
        low = mask & -mask
        rest = mask ^ low
        cell = full_rank[low.bit_length() - 1]
        meets[mask] = cell if not rest else intersect(meets[rest], cell)
        if meets[mask].is_empty:
            continue
        count = count_points_in_fundamental_box(slice_lattice(meets[mask], k), side)
        sign = 1 if mask.bit_count() % 2 else -1
        weights[mask] = sign * Fraction(count, reference)
    families = _admissible_families(weights, len(full_rank))
    logger.debug(f'relative universal projection: {len(full_rank)} cells, {len(families)} families')
    projections = {mask: drop_project(meets[mask], k) for mask in weights}
    cells = prop_join_all(_family_term(family, weights) for family in families)
    memo: dict[frozenset[int], ShiftedLattice] = {}
    return chain_of_links(kept, (_translate_masks(cell, projections, kept, memo) for cell in cells))


def _down(mask: int) -> frozenset[int]:
    """Nonempty submasks of ``mask``; the projection of a meet lies inside those of its submasks."""
    subs = set()
    sub = mask
    while sub:
        subs.add(sub)
        sub = (sub - 1) & mask
    return frozenset(subs)


def _family_term(family: frozenset[int], weights: dict[int, Fraction]) -> PropChain:
    # meet of the family's projections minus the projections of every other mask
    positive = prop_conjunction(family)
    negative = prop_and(positive, frozenset(_down(m) for m in weights if m not in family))
    return prop_cons(positive, prop_cons(negative, (BOTTOM,)))


def _translate_masks(
    cell: PropFormula, projections: dict[int, ShiftedLattice], dim: int, memo: dict[frozenset[int], ShiftedLattice]
) -> LatticeUnion:
    parts = []
    for conjunct in sorted(cell, key=sorted):
        meet = memo.get(conjunct)
        if meet is None:
            meet = memo[conjunct] = reduce(intersect, (projections[m] for m in sorted(conjunct)), full(dim))
        parts.append(meet)
    return LatticeUnion.of(parts, dim)


def _project_suffix(u: DnfChain, k: int) -> DnfChain:
    # u must be decreasing; alternates existential projections of odd links with relative
    # universal projections of even links against the preceding link.
    kept = u.dim - k
    primes: list[DnfChain] = []
    for r, link in enumerate(u.links):
        if r % 2 == 0:
            primes.append(chain_of_union(union_drop(link, k)))
            continue
        previous, previous_prime = u.links[r - 1], primes[-1]
        acc = chain_top(kept)
        for cell in previous.cells:
            outside = chain_bool(
                BoolOp.MINUS, previous_prime, chain_of_union(LatticeUnion.of((drop_project(cell, k),), kept))
            )
            acc = chain_bool(BoolOp.AND, acc, chain_bool(BoolOp.OR, rel_unproj(cell, link, k), outside))
        primes.append(acc)
    if not primes:
        return chain_empty(kept)
    result = primes[-1]
    for prime in reversed(primes[:-1]):
        result = chain_bool(BoolOp.MINUS, prime, result)
    return result


def chain_project(indices: Iterable[int], u: DnfChain) -> DnfChain:
    """Existential projection over 1-based coordinates, returned as a cylinder in the same dimension."""
    chosen = check_indices(indices, u.dim)
    if not chosen or not u.links:
        return u
    order = suffix_order(chosen, u.dim)
    projected = _project_suffix(chain_decreasing(chain_permute(u, order)), len(chosen))
    return chain_permute(chain_pad(projected, u.dim), inverse_order(order))


def chain_unproj(indices: Iterable[int], u: DnfChain) -> DnfChain:
    """Universal projection over 1-based coordinates, returned as a cylinder in the same dimension."""
    chosen = check_indices(indices, u.dim)
    if not chosen or not u.links:
        return u
    k = len(chosen)
    order = suffix_order(chosen, u.dim)
    permuted = chain_permute(u, order)
    head = rel_unproj(full(u.dim), permuted.links[0], k)
    tail = _project_suffix(chain_decreasing(DnfChain(u.dim, permuted.links[1:])), k)
    projected = chain_bool(BoolOp.MINUS, head, tail)
    return chain_permute(chain_pad(projected, u.dim), inverse_order(order))
