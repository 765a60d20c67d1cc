"""Request handlers: pure functions from request models to response models.

The HTTP endpoints and the CLI subcommands both dispatch here, so every
front end serializes identically.
"""

from __future__ import annotations

from typing import Optional

from . import bijection, census, reflections, rules, ties
from .core import Interval, Lot, ParkOutcome, PrefSeq
from .errors import InvalidFamilyParams, InvalidLot
from .schemas import (
    CarModel,
    CountRequest,
    CountResponse,
    DecomposeRequest,
    DecomposeResponse,
    EnumerateRequest,
    EnumerateResponse,
    LotModel,
    MapRequest,
    MapResponse,
    ParkRequest,
    ParkResponse,
    PartModel,
    StatsRequest,
    StatsResponse,
    VerifyRequest,
    VerifyResponse,
)


def _lot_model(lot: Lot) -> LotModel:
    ob = lot.obstruction
    return LotModel(total=lot.total, obstruction=(ob.lo, ob.hi) if ob else None)


def _outcome_response(outcome: ParkOutcome) -> ParkResponse:
    return ParkResponse(
        parked=list(outcome.parked_spots),
        failed_at=outcome.failed_at,
        cars=[
            CarModel(
                pref=r.preferred,
                spot=r.parked,
                mode=r.mode.value,
                path=(r.traverse.lo, r.traverse.hi),
            )
            for r in outcome.cars
        ],
    )


def _obstructed_lot(n: int, k: Optional[int], start: Optional[int]) -> Lot:
    if k is None or k < 1:
        raise InvalidLot("an obstructed lot needs k >= 1")
    if start is None:
        raise InvalidLot("an obstructed lot needs obstruction_start")
    return Lot(n + k, Interval(start, start + k - 1))


def _need_k(k: Optional[int]) -> int:
    if k is None:
        raise InvalidFamilyParams("this operation needs k")
    return k


def park(req: ParkRequest) -> ParkResponse:
    prefs = tuple(req.prefs)
    if req.family == "classical":
        outcome = rules.park_classical(prefs, req.n)
    elif req.family == "naples":
        outcome = rules.park_naples(prefs, req.n, _need_k(req.k))
    else:
        outcome = rules.park_obstructed(
            prefs, _obstructed_lot(req.n, req.k, req.obstruction_start)
        )
    return _outcome_response(outcome)


def apply_map(req: MapRequest) -> MapResponse:
    prefs: PrefSeq = tuple(req.prefs)
    n = req.n
    if req.op == "phi":
        return MapResponse(prefs=list(reflections.phi(prefs, n)))
    if req.op == "phi-bar":
        lot = _obstructed_lot(n, req.k, req.obstruction_start)
        image, new_lot = reflections.phi_bar(prefs, lot)
        return MapResponse(prefs=list(image), lot=_lot_model(new_lot))
    if req.op == "iota":
        image, lot = reflections.iota(prefs, n, _need_k(req.k))
        return MapResponse(prefs=list(image), lot=_lot_model(lot))
    k = _need_k(req.k)
    if req.op == "xi":
        return MapResponse(prefs=list(bijection.xi(prefs, n, k)))
    if req.op == "xi-inv":
        return MapResponse(prefs=list(bijection.xi_inverse(prefs, n, k)))
    if req.op == "xi-bar":
        image, lot = bijection.xi_bar(prefs, n, k)
        return MapResponse(prefs=list(image), lot=_lot_model(lot))
    if req.op == "psi":
        return MapResponse(prefs=list(ties.psi_small(prefs, n, k)))
    return MapResponse(prefs=list(ties.psi_big(prefs, n, k)))


def decompose(req: DecomposeRequest) -> DecomposeResponse:
    prefs = tuple(req.prefs)
    dec = bijection.k_decompose(prefs, req.n, req.k)
    return DecomposeResponse(
        parts=[
            PartModel(start=p.start, len=p.length, prefs=list(prefs[p.start - 1 : p.stop - 1]))
            for p in dec.parts
        ],
        boundary_cars=list(dec.boundary_cars()),
    )


def sequence_stats(req: StatsRequest) -> StatsResponse:
    s = ties.stats(req.prefs)
    return StatsResponse(ascents=s.ascents, descents=s.descents, ties=s.ties)


def enumerate_members(req: EnumerateRequest) -> EnumerateResponse:
    cap = None if req.force else census.CANDIDATE_GUARD
    stream = census.enumerate_family(
        req.family,
        req.m,
        req.n,
        req.k,
        req.obstruction_start,
        max_candidates=cap,
        threads=req.threads,
    )
    sequences: list[list[int]] = []
    for f in stream:
        if req.limit is not None and len(sequences) >= req.limit:
            break
        sequences.append(list(f))
    return EnumerateResponse(count=len(sequences), sequences=sequences)


def count(req: CountRequest) -> CountResponse:
    if req.formula == "classical":
        if req.m is None:
            raise InvalidFamilyParams("classical count needs m")
        return CountResponse(value=census.count_classical(req.m, req.n))
    if req.m is not None:
        raise InvalidFamilyParams(f"{req.formula} count takes no m")
    if req.formula == "contained":
        return CountResponse(value=census.count_contained(req.n))
    k = _need_k(req.k)
    if req.formula == "lpf":
        return CountResponse(value=census.count_lpf(req.n, k))
    return CountResponse(value=census.naples_count_recursive(req.n, k))


def verify_claim(req: VerifyRequest) -> VerifyResponse:
    cap = None if req.force else census.CANDIDATE_GUARD
    report = census.verify(
        req.claim, req.m, req.n, req.k, max_candidates=cap, threads=req.threads
    )
    return VerifyResponse(
        claim=report.claim,
        params=report.params,
        lhs=report.lhs,
        rhs=report.rhs,
        ok=report.ok,
        counterexamples=[list(f) for f in report.counterexamples],
    )
