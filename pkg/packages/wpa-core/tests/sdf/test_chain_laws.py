"""Algebraic laws of chain operations on random chains: complement, commutativity and quantifier duality."""

import random

import pytest

from wpa_core.lattice import shifted_lattice
from wpa_core.sdf import BoolOp, DnfChain, chain_bool, chain_equal, chain_pad, chain_top
from wpa_core.universal import chain_project, chain_unproj, rel_unproj

from ..conftest import chain, union


def _random_chain_1d(rng: random.Random) -> DnfChain:
    links = []
    for _ in range(rng.randint(0, 3)):
        cells = []
        for _ in range(rng.randint(1, 2)):
            m = rng.randint(1, 6)
            cells.append(shifted_lattice((rng.randrange(m),), [(m,)]))
        links.append(union(1, *cells))
    return chain(1, *links)


def _random_cell_2d(rng: random.Random):
    a, c = rng.randint(1, 2), rng.randint(1, 3)
    return shifted_lattice((rng.randrange(a), rng.randrange(c)), [(a, rng.randrange(3)), (0, c)])


def _random_chain_2d(rng: random.Random) -> DnfChain:
    links = [union(2, *(_random_cell_2d(rng) for _ in range(rng.randint(1, 2)))) for _ in range(rng.randint(1, 2))]
    return chain(2, *links)


class TestComplement:
    @pytest.mark.parametrize('seed', range(60))
    def test_double_complement(self, seed: int):
        u = _random_chain_1d(random.Random(seed))
        top = chain_top(1)
        assert chain_equal(chain_bool(BoolOp.MINUS, top, chain_bool(BoolOp.MINUS, top, u)), u)


class TestCommutativity:
    @pytest.mark.parametrize('op', [BoolOp.OR, BoolOp.AND])
    @pytest.mark.parametrize('seed', range(60))
    def test_operands_swap(self, op: BoolOp, seed: int):
        rng = random.Random(1000 + seed)
        u, v = _random_chain_1d(rng), _random_chain_1d(rng)
        assert chain_equal(chain_bool(op, u, v), chain_bool(op, v, u))


class TestQuantifierDuality:
    @pytest.mark.parametrize('seed', range(40))
    def test_forall_is_not_exists_not(self, seed: int):
        u = _random_chain_2d(random.Random(2000 + seed))
        top = chain_top(2)
        dual = chain_bool(BoolOp.MINUS, top, chain_project([2], chain_bool(BoolOp.MINUS, top, u)))
        assert chain_equal(chain_unproj([2], u), dual)

    @pytest.mark.parametrize('seed', range(40))
    def test_projection_of_difference(self, seed: int):
        rng = random.Random(3000 + seed)
        x = _random_cell_2d(rng)
        y = union(2, *(_random_cell_2d(rng) for _ in range(rng.randint(1, 2))))
        u, v = chain(2, union(2, x)), chain(2, y)
        covered = chain_pad(rel_unproj(x, y, 1), 2)
        expected = chain_bool(BoolOp.MINUS, chain_project([2], u), covered)
        assert chain_equal(chain_project([2], chain_bool(BoolOp.MINUS, u, v)), expected)
