"""Deterministic simulators for the four parking disciplines.

All simulators take cars in arrival order and report full traces. Failure is
a value (``failed_at`` on the outcome), not an exception. The ``_sim_*``
helpers return plain tuples and are shared by the enumeration and reflection
machinery, which calls them in tight loops; the public functions wrap their
results into :class:`~naplespark.core.ParkOutcome`.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .core import CarRecord, Interval, Lot, ParkMode, ParkOutcome, PrefSeq, validate
from .errors import InvalidLot

_AT = ParkMode.AT
_BACKWARD = ParkMode.BACKWARD
_FORWARD = ParkMode.FORWARD

# traverse pairs are plain (lo, hi) vertex tuples
_Sim = tuple[list[int], Optional[int], list[tuple[int, int]], list[ParkMode]]


def _sim_classical(prefs: Sequence[int], n: int) -> _Sim:
    occupied = bytearray(n + 2)
    spots: list[int] = []
    trav: list[tuple[int, int]] = []
    modes: list[ParkMode] = []
    for j, p in enumerate(prefs, 1):
        s = p
        while s <= n and occupied[s]:
            s += 1
        if s > n:
            return spots, j, trav, modes
        occupied[s] = 1
        spots.append(s)
        trav.append((p, s))
        modes.append(_AT if s == p else _FORWARD)
    return spots, None, trav, modes


def _sim_naples(prefs: Sequence[int], n: int, k: int) -> _Sim:
    occupied = bytearray(n + 2)
    spots: list[int] = []
    trav: list[tuple[int, int]] = []
    modes: list[ParkMode] = []
    for j, p in enumerate(prefs, 1):
        if not occupied[p]:
            occupied[p] = 1
            spots.append(p)
            trav.append((p, p))
            modes.append(_AT)
            continue
        lo = p - k
        if lo < 1:
            lo = 1
        s = 0
        v = p - 1
        while v >= lo:  # nearest backward vertex first
            if not occupied[v]:
                s = v
                break
            v -= 1
        if s:
            occupied[s] = 1
            spots.append(s)
            trav.append((s, p))
            modes.append(_BACKWARD)
            continue
        s = p + 1
        while s <= n and occupied[s]:
            s += 1
        if s > n:
            return spots, j, trav, modes
        occupied[s] = 1
        spots.append(s)
        trav.append((lo, s))  # backward-checked vertices belong to the traverse
        modes.append(_FORWARD)
    return spots, None, trav, modes


def _sim_obstructed(prefs: Sequence[int], total: int, ob_lo: int, ob_hi: int) -> _Sim:
    occupied = bytearray(total + 2)
    for v in range(ob_lo, ob_hi + 1):
        occupied[v] = 1
    spots: list[int] = []
    trav: list[tuple[int, int]] = []
    modes: list[ParkMode] = []
    for j, p in enumerate(prefs, 1):
        s = p
        while s <= total and occupied[s]:
            s += 1
        if s > total:
            return spots, j, trav, modes
        occupied[s] = 1
        spots.append(s)
        trav.append((p, s))
        modes.append(_AT if s == p else _FORWARD)
    return spots, None, trav, modes


def _is_contained(prefs: Sequence[int], n: int, k: int) -> bool:
    occupied = bytearray(n + 2)
    for p in prefs:
        if p <= k:
            v = 1
            while v <= p and occupied[v]:
                v += 1
            if v > p:  # nothing free at or below the preference
                return False
        if not occupied[p]:
            occupied[p] = 1
            continue
        lo = p - k
        if lo < 1:
            lo = 1
        s = 0
        v = p - 1
        while v >= lo:
            if not occupied[v]:
                s = v
                break
            v -= 1
        if not s:
            s = p + 1
            while s <= n and occupied[s]:
                s += 1
            if s > n:
                return False
        occupied[s] = 1
    return True


def _outcome(lot: Lot, prefs: PrefSeq, sim: _Sim) -> ParkOutcome:
    spots, failed_at, trav, modes = sim
    cars = tuple(
        CarRecord(p, s, m, Interval(lo, hi))
        for p, s, m, (lo, hi) in zip(prefs, spots, modes, trav)
    )
    return ParkOutcome(lot=lot, cars=cars, failed_at=failed_at)


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"backup limit k must be >= 0, got {k}")


def park_classical(prefs: Iterable[int], n: int) -> ParkOutcome:
    """Forward-only rule: each car takes the first free vertex at or after
    its preference; a car with no free vertex ahead fails."""
    prefs, lot = validate(prefs, Lot(n))
    return _outcome(lot, prefs, _sim_classical(prefs, n))


def park_naples(prefs: Iterable[int], n: int, k: int) -> ParkOutcome:
    """Backward-capable rule with backup limit ``k``.

    A car whose preference ``p`` is taken first checks ``p-1, p-2, ...`` down
    to ``p-k`` (clipped to the lot) and parks at the nearest free one; if all
    are taken it drives forward from ``p`` like the classical rule. ``k`` may
    exceed the lot size; the backward window is clipped either way.
    """
    _check_k(k)
    prefs, lot = validate(prefs, Lot(n))
    return _outcome(lot, prefs, _sim_naples(prefs, n, k))


def park_obstructed(prefs: Iterable[int], lot: Lot) -> ParkOutcome:
    """Forward-only rule on a lot with an obstructed block.

    Obstructed vertices count as permanently occupied but may be preferred,
    in which case the car simply starts driving from inside the block.
    """
    if lot.obstruction is None:
        raise InvalidLot("obstructed parking needs a lot with an obstruction")
    prefs, lot = validate(prefs, lot)
    ob = lot.obstruction
    return _outcome(lot, prefs, _sim_obstructed(prefs, lot.total, ob.lo, ob.hi))


def is_contained(prefs: Iterable[int], n: int, k: int) -> bool:
    """True when the sequence parks under the backward-capable rule and no
    car with preference ``p <= k`` ever finds all of ``1..p`` occupied on
    arrival (i.e. no backward search would have to run off the lot's left
    end)."""
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    return _is_contained(prefs, n, k)
