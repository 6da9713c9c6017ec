"""Strictly decreasing chains of propositional DNF formulas, and chains of lattice unions built on them.

A chain ``(f1, f2, ..., fk)`` denotes ``f1 - (f2 - (... - fk))``. Boolean operations on two chains
are done symbolically on propositional chains over the links of both operands and then translated
back to lattice unions, which bounds the number of links by the product of the input lengths.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Final, Hashable, Iterable, Sequence

from wpa_core.lattice import LatticeError, drop_project
from wpa_core.unions import (
    LatticeUnion,
    union_empty,
    union_full,
    union_meet,
    union_member,
    union_pad,
    union_permute,
    union_subset,
)

Atom = Hashable
Conjunct = frozenset[Atom]
PropFormula = frozenset[Conjunct]
PropChain = tuple[PropFormula, ...]

BOTTOM: Final[PropFormula] = frozenset()
TOP: Final[PropFormula] = frozenset({frozenset()})


class BoolOp(StrEnum):
    OR = 'or'
    AND = 'and'
    MINUS = 'minus'


def prop_atom(a: Atom) -> PropFormula:
    return frozenset({frozenset({a})})


def prop_conjunction(atoms: Iterable[Atom]) -> PropFormula:
    return frozenset({frozenset(atoms)})


def prop_and(a: PropFormula, b: PropFormula) -> PropFormula:
    """Distributed conjunction: pairwise unions of conjuncts."""
    return frozenset(x | y for x in a for y in b)


def prop_or(a: PropFormula, b: PropFormula) -> PropFormula:
    return a | b


def prop_normalise(a: PropFormula) -> PropFormula:
    """Keep only the absorption-minimal conjuncts."""
    live = sorted(a, key=len)
    kept: list[Conjunct] = []
    for c in live:
        if not any(k <= c for k in kept):
            kept.append(c)
    return frozenset(kept)


def prop_is_empty(a: PropFormula) -> bool:
    return not prop_normalise(a)


def prop_entails(a: PropFormula, b: PropFormula) -> bool:
    """``a |= b`` for negation-free DNF: each conjunct of ``a`` contains some conjunct of ``b``."""
    b = prop_normalise(b)
    return all(any(y <= x for y in b) for x in prop_normalise(a))


def prop_eval(a: PropFormula, true_atoms: Iterable[Atom]) -> bool:
    truth = set(true_atoms)
    return any(c <= truth for c in a)


def prop_semantics(chain: PropChain, true_atoms: Iterable[Atom]) -> bool:
    truth = set(true_atoms)
    value = False
    for cell in reversed(chain):
        value = prop_eval(cell, truth) and not value
    return value


def is_strict(chain: PropChain) -> bool:
    """Nonempty, ends with an unsatisfiable cell, and each cell strictly implies its predecessor."""
    if not chain or not prop_is_empty(chain[-1]):
        return False
    for prev, cur in zip(chain, chain[1:]):
        if not prop_entails(cur, prev) or prop_entails(prev, cur):
            return False
    return True


def _strictly_below(a: PropFormula, b: PropFormula) -> bool:
    return prop_entails(a, b) and not prop_entails(b, a)


@dataclass
class _PropContext:
    """Per-call memo for normalisation and for ``apply`` on suffix pairs."""

    normal: dict[PropFormula, PropFormula] = field(default_factory=dict)
    applied: dict[tuple[BoolOp, PropChain, PropChain], PropChain] = field(default_factory=dict)

    def normalise(self, a: PropFormula) -> PropFormula:
        found = self.normal.get(a)
        if found is None:
            found = self.normal[a] = prop_normalise(a)
        return found

    def normalise_chain(self, chain: PropChain) -> PropChain:
        return tuple(self.normalise(c) for c in chain)

    def cons(self, phi: PropFormula, psi: PropChain) -> PropChain:
        """Prepend ``phi`` to the strict chain ``psi``, restoring strictness."""
        phi = self.normalise(phi)
        if not phi:
            return (BOTTOM,)
        head = self.normalise(psi[0])
        if not head:
            return (phi, BOTTOM)
        if _strictly_below(head, phi):
            return (phi,) + psi
        meet = self.normalise(prop_and(phi, head))
        if _strictly_below(meet, phi):
            return (phi,) + self.cons(meet, psi[1:])
        if len(psi) >= 3:
            return self.cons(self.normalise(prop_and(phi, psi[1])), psi[2:])
        return (BOTTOM,)

    def apply(self, op: BoolOp, a: PropChain, b: PropChain) -> PropChain:
        key = (op, a, b)
        found = self.applied.get(key)
        if found is None:
            found = self.applied[key] = self._apply(op, a, b)
        return found

    def _apply(self, op: BoolOp, a: PropChain, b: PropChain) -> PropChain:
        if prop_is_empty(a[0]) or prop_is_empty(b[0]):
            if op is BoolOp.AND:
                return (BOTTOM,)
            if op is BoolOp.MINUS:
                return a
            return b if prop_is_empty(a[0]) else a
        head_a, tail_a = a[0], a[1:]
        head_b, tail_b = b[0], b[1:]
        match op:
            case BoolOp.AND:
                result = self.cons(prop_and(head_a, head_b), self.apply(BoolOp.OR, tail_a, tail_b))
            case BoolOp.MINUS:
                result = self.cons(head_a, self.apply(BoolOp.OR, tail_a, b))
            case BoolOp.OR if prop_entails(head_b, head_a):
                result = self.cons(head_a, self.apply(BoolOp.MINUS, tail_a, b))
            case BoolOp.OR:
                inner = self.normalise_chain(
                    self.cons(prop_and(head_a, head_b), self.apply(BoolOp.AND, tail_a, tail_b))
                )
                inner = self.apply(BoolOp.MINUS, self.apply(BoolOp.OR, tail_a, tail_b), inner)
                result = self.cons(prop_or(head_a, head_b), inner)
        return self.normalise_chain(result)


def prop_cons(phi: PropFormula, psi: PropChain) -> PropChain:
    result = _PropContext().cons(phi, psi)
    assert len(result) <= len(psi) + 1
    return result


def prop_apply(op: BoolOp | str, a: PropChain, b: PropChain) -> PropChain:
    """Strict chain for ``a op b``, of length at most ``len(a) * len(b)``."""
    result = _PropContext().apply(BoolOp(op), a, b)
    assert len(result) <= len(a) * len(b)
    return result


def prop_join_all(chains: Iterable[PropChain]) -> PropChain:
    """Strict chain for the disjunction of ``chains``, folded in one memo context."""
    context = _PropContext()
    result: PropChain = (BOTTOM,)
    for chain in chains:
        result = context.apply(BoolOp.OR, result, chain)
    return result


def cumulative_chain(atoms: Sequence[Atom]) -> PropChain:
    """Strict chain ``(p1, p1 p2, ..., p1..pn, ⊥)`` for link atoms ``p1..pn``."""
    return tuple(prop_conjunction(atoms[: i + 1]) for i in range(len(atoms))) + (BOTTOM,)


# ---------------------------------------------------------------------------
# Chains of lattice unions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DnfChain:
    """Chain of lattice unions ``x1 - (x2 - (... - xl))`` over ``Z^dim``. An empty chain is ∅."""

    dim: int
    links: tuple[LatticeUnion, ...] = ()

    def __post_init__(self):
        for link in self.links:
            if link.dim != self.dim:
                raise LatticeError(f'link over Z^{link.dim} inside a chain over Z^{self.dim}')

    def __len__(self) -> int:
        return len(self.links)

    def __str__(self) -> str:
        if not self.links:
            return f'EMPTY^{self.dim}'
        return ' - '.join(f'({link})' for link in self.links)


def chain_empty(dim: int) -> DnfChain:
    return DnfChain(dim, ())


def chain_top(dim: int) -> DnfChain:
    return DnfChain(dim, (union_full(dim),))


def chain_of_union(x: LatticeUnion) -> DnfChain:
    return DnfChain(x.dim, () if x.is_empty else (x,))


def chain_of_links(dim: int, links: Iterable[LatticeUnion]) -> DnfChain:
    """Chain truncated at its first empty link."""
    kept = []
    for link in links:
        if link.is_empty:
            break
        kept.append(link)
    return DnfChain(dim, tuple(kept))


def chain_member(u: DnfChain, p: Sequence[int]) -> bool:
    value = False
    for link in reversed(u.links):
        value = union_member(link, p) and not value
    return value


def chain_pad(u: DnfChain, m: int) -> DnfChain:
    if m == u.dim:
        return u
    return DnfChain(m, tuple(union_pad(link, m) for link in u.links))


def chain_equalize(u: DnfChain, v: DnfChain) -> tuple[DnfChain, DnfChain]:
    d = max(u.dim, v.dim)
    return chain_pad(u, d), chain_pad(v, d)


def chain_permute(u: DnfChain, order: Sequence[int]) -> DnfChain:
    return DnfChain(u.dim, tuple(union_permute(link, order) for link in u.links))


def chain_truncate(u: DnfChain, m: int) -> DnfChain:
    """Drop the coordinates after ``m``. Only meaningful when every link is a cylinder in them."""
    if m == u.dim:
        return u
    k = u.dim - m
    links = (LatticeUnion.of((drop_project(c, k) for c in link.cells), m) for link in u.links)
    return chain_of_links(m, links)


def _translate(cell: PropFormula, left: DnfChain, right: DnfChain, memo: dict[Conjunct, LatticeUnion]) -> LatticeUnion:
    out = union_empty(left.dim)
    for conjunct in sorted(cell, key=lambda c: sorted(map(repr, c))):
        meet = memo.get(conjunct)
        if meet is None:
            meet = union_full(left.dim)
            for tag, index in sorted(conjunct):
                meet = union_meet(meet, (left if tag == 'p' else right).links[index - 1])
            memo[conjunct] = meet
        out = LatticeUnion.of(out.cells + meet.cells, left.dim)
    return out


def chain_bool(op: BoolOp | str, u: DnfChain, v: DnfChain) -> DnfChain:
    """Chain for ``u op v`` with at most ``(len(u) + 1) * (len(v) + 1)`` links; the result is decreasing."""
    u, v = chain_equalize(u, v)
    phi = cumulative_chain([('p', i) for i in range(1, len(u) + 1)])
    psi = cumulative_chain([('q', i) for i in range(1, len(v) + 1)])
    cells = prop_apply(op, phi, psi)
    memo: dict[Conjunct, LatticeUnion] = {}
    result = chain_of_links(u.dim, (_translate(cell, u, v, memo) for cell in cells))
    assert len(result) <= (len(u) + 1) * (len(v) + 1)
    return result


def chain_leq(u: DnfChain, v: DnfChain) -> bool:
    """Exact test ``[[u]] ⊆ [[v]]``."""
    w = chain_bool(BoolOp.MINUS, u, v).links
    i = 0
    while i < len(w):
        if i + 1 >= len(w) or not union_subset(w[i], w[i + 1]):
            return False
        i += 2
    return True


def chain_equal(u: DnfChain, v: DnfChain) -> bool:
    return chain_leq(u, v) and chain_leq(v, u)


def chain_decreasing(u: DnfChain) -> DnfChain:
    """Equivalent chain whose links are cumulative meets, so each link lies inside the previous one."""
    links: list[LatticeUnion] = []
    for link in u.links:
        if links and not union_subset(link, links[-1]):
            link = union_meet(links[-1], link)
        if link.is_empty:
            break
        links.append(link)
    return DnfChain(u.dim, tuple(links))


def union_of_chain(u: DnfChain) -> LatticeUnion:
    """Set of a chain with at most one link."""
    if len(u.links) > 1:
        raise LatticeError(f'chain of {len(u.links)} links is not a plain union')
    return u.links[0] if u.links else union_empty(u.dim)
