"""Component extraction: maximal vertex intervals linked by traverse paths.

Two vertices belong to the same component when a chain of pairwise-overlapping
traverse paths connects them, so components are simply the merge of the
outcome's traverse intervals. Vertices touched by no traverse path belong to
no component. Obstruction components additionally fold the obstructed block
together with every component that meets it.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import Interval, Lot, ParkOutcome
from .errors import InvalidLot, NotAParkingFunction

_Pair = tuple[int, int]


def _merge_pairs(pairs: Iterable[_Pair]) -> list[_Pair]:
    """Merge intervals sharing at least one vertex (adjacency is not enough)."""
    out: list[_Pair] = []
    for lo, hi in sorted(pairs):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _obstruction_pairs(pairs: Sequence[_Pair], ob_lo: int, ob_hi: int) -> list[_Pair]:
    comps = _merge_pairs(pairs)
    lo, hi = ob_lo, ob_hi
    keep: list[_Pair] = []
    for c_lo, c_hi in comps:
        if c_lo <= hi and lo <= c_hi:
            lo = min(lo, c_lo)
            hi = max(hi, c_hi)
        else:
            keep.append((c_lo, c_hi))
    keep.append((lo, hi))
    keep.sort()
    return keep


def _require_success(outcome: ParkOutcome) -> None:
    if not outcome.succeeded:
        raise NotAParkingFunction(f"car {outcome.failed_at} could not park")


def _traverse_pairs(outcome: ParkOutcome) -> list[_Pair]:
    return [(r.traverse.lo, r.traverse.hi) for r in outcome.cars]


def parking_components(outcome: ParkOutcome) -> list[Interval]:
    """Components of a successful forward-rule outcome, sorted by position."""
    _require_success(outcome)
    return [Interval(lo, hi) for lo, hi in _merge_pairs(_traverse_pairs(outcome))]


def naples_components(outcome: ParkOutcome) -> list[Interval]:
    """Components of a successful backward-capable outcome.

    Identical merging, but the traverses already include backward-checked
    vertices, so components can extend left of every preference.
    """
    _require_success(outcome)
    return [Interval(lo, hi) for lo, hi in _merge_pairs(_traverse_pairs(outcome))]


def obstruction_components(outcome: ParkOutcome, lot: Lot) -> list[Interval]:
    """Components of an obstructed outcome, with the obstructed block merged
    into every component it touches (the block itself is a component when no
    traverse meets it)."""
    _require_success(outcome)
    if lot.obstruction is None:
        raise InvalidLot("lot has no obstruction")
    if outcome.lot != lot:
        raise InvalidLot("outcome was computed on a different lot")
    ob = lot.obstruction
    pairs = _obstruction_pairs(_traverse_pairs(outcome), ob.lo, ob.hi)
    return [Interval(lo, hi) for lo, hi in pairs]
