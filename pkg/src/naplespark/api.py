"""FastAPI application exposing the engine over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import service
from .errors import ParkingError, TooLarge
from .schemas import (
    CountRequest,
    CountResponse,
    DecomposeRequest,
    DecomposeResponse,
    EnumerateRequest,
    EnumerateResponse,
    MapRequest,
    MapResponse,
    ParkRequest,
    ParkResponse,
    StatsRequest,
    StatsResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="naplespark",
    description=(
        "Parking-function engine: simulate forward, backward-capable and "
        "obstructed parking rules, apply the structural maps between the "
        "families, enumerate and count them, and verify their identities."
    ),
    version="0.1.0",
)


@app.exception_handler(ParkingError)
async def _domain_error(request: Request, exc: ParkingError) -> JSONResponse:
    status = 413 if isinstance(exc, TooLarge) else 400
    return JSONResponse(
        status_code=status,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/park", response_model=ParkResponse)
def park(req: ParkRequest) -> ParkResponse:
    return service.park(req)


@app.post("/map", response_model=MapResponse, response_model_exclude_none=False)
def apply_map(req: MapRequest) -> MapResponse:
    return service.apply_map(req)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(req: DecomposeRequest) -> DecomposeResponse:
    return service.decompose(req)


@app.post("/stats", response_model=StatsResponse)
def sequence_stats(req: StatsRequest) -> StatsResponse:
    return service.sequence_stats(req)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_members(req: EnumerateRequest) -> EnumerateResponse:
    return service.enumerate_members(req)


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    return service.count(req)


@app.post("/verify", response_model=VerifyResponse)
def verify_claim(req: VerifyRequest) -> VerifyResponse:
    return service.verify_claim(req)
