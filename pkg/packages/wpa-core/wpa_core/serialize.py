"""JSON form of shifted lattices, unions and chains. Integers travel as decimal strings."""

from typing import Annotated, Literal

from pydantic import BaseModel, Field, TypeAdapter

from wpa_core.lattice import ShiftedLattice, empty, shifted_lattice
from wpa_core.sdf import DnfChain, chain_of_links
from wpa_core.unions import LatticeUnion

DecimalStr = Annotated[str, Field(pattern=r'^-?[0-9]+$')]


class EmptyLatticeModel(BaseModel):
    empty: Literal[True]
    dim: int = Field(ge=0)


class LatticeModel(BaseModel):
    dim: int = Field(ge=0)
    base: list[DecimalStr]
    periods: list[list[DecimalStr]]


class UnionModel(BaseModel):
    union: list[LatticeModel | EmptyLatticeModel]


class ChainModel(BaseModel):
    dim: int = Field(ge=0)
    chain: list[UnionModel]


def lattice_to_model(x: ShiftedLattice) -> LatticeModel | EmptyLatticeModel:
    if x.base is None:
        return EmptyLatticeModel(empty=True, dim=x.dim)
    return LatticeModel(
        dim=x.dim,
        base=[str(v) for v in x.base],
        periods=[[str(v) for v in p] for p in x.periods],
    )


def lattice_from_model(model: LatticeModel | EmptyLatticeModel) -> ShiftedLattice:
    if isinstance(model, EmptyLatticeModel):
        return empty(model.dim)
    if len(model.base) != model.dim or any(len(p) != model.dim for p in model.periods):
        raise ValueError(f'lattice entries do not live in Z^{model.dim}')
    return shifted_lattice([int(v) for v in model.base], [[int(v) for v in p] for p in model.periods])


def lattice_to_json(x: ShiftedLattice) -> str:
    return lattice_to_model(x).model_dump_json()


def lattice_from_json(text: str) -> ShiftedLattice:
    model = TypeAdapter(LatticeModel | EmptyLatticeModel).validate_json(text)
    return lattice_from_model(model)


def chain_to_model(u: DnfChain) -> ChainModel:
    return ChainModel(dim=u.dim, chain=[UnionModel(union=[lattice_to_model(c) for c in link.cells]) for link in u.links])


def chain_to_json(u: DnfChain) -> str:
    """Compact, deterministic JSON for a chain."""
    return chain_to_model(u).model_dump_json()


def chain_from_json(text: str) -> DnfChain:
    model = ChainModel.model_validate_json(text)
    links = (LatticeUnion.of((lattice_from_model(c) for c in link.union), model.dim) for link in model.chain)
    return chain_of_links(model.dim, links)
