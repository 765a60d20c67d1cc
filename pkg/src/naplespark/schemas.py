"""Pydantic request/response models shared by the HTTP API and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

ParkFamily = Literal["classical", "naples", "obstructed"]
MapOp = Literal["phi", "phi-bar", "iota", "xi", "xi-inv", "xi-bar", "psi", "Psi"]
FamilyName = Literal["PF", "NAPLES", "CONTAINED", "OPF", "LPF"]
ClaimName = Literal["bijection", "ties", "injection", "recursion", "lpf-count", "bound"]


class LotModel(BaseModel):
    total: int
    obstruction: Optional[tuple[int, int]] = None


class CarModel(BaseModel):
    pref: int
    spot: int
    mode: Literal["at", "backward", "forward"]
    path: tuple[int, int]


class ParkRequest(BaseModel):
    family: ParkFamily
    prefs: list[int]
    n: int = Field(ge=0, description="parkable vertices; obstructed lots add k more")
    k: Optional[int] = Field(default=None, ge=0)
    obstruction_start: Optional[int] = Field(default=None, ge=1)


class ParkResponse(BaseModel):
    parked: list[int]
    failed_at: Optional[int]
    cars: list[CarModel]


class MapRequest(BaseModel):
    op: MapOp
    prefs: list[int]
    n: int = Field(ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    obstruction_start: Optional[int] = Field(default=None, ge=1)


class MapResponse(BaseModel):
    prefs: list[int]
    lot: Optional[LotModel] = None


class DecomposeRequest(BaseModel):
    prefs: list[int]
    n: int = Field(ge=0)
    k: int = Field(ge=0)


class PartModel(BaseModel):
    start: int
    len: int
    prefs: list[int]


class DecomposeResponse(BaseModel):
    parts: list[PartModel]
    boundary_cars: list[int]


class StatsRequest(BaseModel):
    prefs: list[int]


class StatsResponse(BaseModel):
    ascents: int
    descents: int
    ties: int


class EnumerateRequest(BaseModel):
    family: FamilyName
    m: int = Field(ge=0)
    n: int = Field(ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    obstruction_start: Optional[int] = Field(default=None, ge=1)
    limit: Optional[int] = Field(default=None, ge=0)
    threads: int = Field(default=1, ge=1)
    force: bool = Field(default=False, description="lift the candidate-count guard")


class EnumerateResponse(BaseModel):
    count: int
    sequences: list[list[int]]


class CountRequest(BaseModel):
    formula: Literal["classical", "contained", "lpf", "naples-recursive"]
    m: Optional[int] = Field(default=None, ge=0)
    n: int = Field(ge=0)
    k: Optional[int] = Field(default=None, ge=0)


class CountResponse(BaseModel):
    value: int


class VerifyRequest(BaseModel):
    claim: ClaimName
    m: Optional[int] = Field(default=None, ge=0)
    n: int = Field(ge=0)
    k: int = Field(ge=0)
    threads: int = Field(default=1, ge=1)
    force: bool = Field(default=False)


class VerifyResponse(BaseModel):
    claim: str
    params: dict[str, int]
    lhs: int
    rhs: int
    ok: bool
    counterexamples: list[list[int]]


class ErrorResponse(BaseModel):
    error: str
    detail: str
