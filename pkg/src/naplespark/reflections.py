"""Structural reflection maps on parking configurations.

Each map reflects components about the lot's center and translates every
preference onto the reflected component, keeping its offset from the
component's left endpoint. All maps preserve each car's traverse length.
"""

from __future__ import annotations

from typing import Iterable

from .components import _merge_pairs, _obstruction_pairs
from .core import Interval, Lot, PrefSeq, validate
from .errors import (
    EndpointNotComponentBoundary,
    InvalidLot,
    NotAParkingFunction,
    NotContained,
)
from .rules import _check_k, _is_contained, _sim_classical, _sim_naples, _sim_obstructed

_Pair = tuple[int, int]


def _translate(prefs: PrefSeq, comps: list[_Pair], total: int) -> PrefSeq:
    """Map each preference onto the mirror image of its component."""
    out = []
    for p in prefs:
        for lo, hi in comps:
            if lo <= p <= hi:
                out.append(total + 1 - hi + (p - lo))
                break
        else:  # unreachable: every preference lies on some traverse path
            raise AssertionError(f"preference {p} outside every component")
    return tuple(out)


def phi(prefs: Iterable[int], n: int) -> PrefSeq:
    """Reflect a forward-rule parking configuration about the lot's center.

    An involution on successful sequences: component by component, a car
    preferring offset ``a`` from the left end prefers offset ``a`` from the
    left end of the mirrored component afterwards.
    """
    prefs, _ = validate(prefs, Lot(n))
    _, failed, trav, _ = _sim_classical(prefs, n)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    return _translate(prefs, _merge_pairs(trav), n)


def phi_bar(prefs: Iterable[int], lot: Lot) -> tuple[PrefSeq, Lot]:
    """Reflect an obstructed configuration, relocating the obstructed block.

    Works like :func:`phi` on obstruction components; the block keeps its
    offset within its component, so its new position is returned as part of
    the relocated lot.
    """
    if lot.obstruction is None:
        raise InvalidLot("reflection of an obstructed lot needs an obstruction")
    prefs, lot = validate(prefs, lot)
    ob = lot.obstruction
    total = lot.total
    _, failed, trav, _ = _sim_obstructed(prefs, total, ob.lo, ob.hi)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    comps = _obstruction_pairs(trav, ob.lo, ob.hi)
    image = _translate(prefs, comps, total)
    host_lo, host_hi = next(c for c in comps if c[0] <= ob.lo and ob.hi <= c[1])
    shift = (total + 1 - host_hi) - host_lo
    new_ob = Interval(ob.lo + shift, ob.hi + shift)
    return image, Lot(total, new_ob)


def iota(prefs: Iterable[int], n: int, k: int) -> tuple[PrefSeq, Lot]:
    """Shift every preference up by ``k`` and prepend ``k`` obstructed
    vertices, embedding an ``n``-vertex configuration into an ``n+k`` lot."""
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    _, failed, _, _ = _sim_classical(prefs, n)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    lot = Lot(n + k, Interval(1, k) if k else None)
    return tuple(p + k for p in prefs), lot


def phi_restricted(
    prefs: Iterable[int], n: int, k: int, a: int, b: int
) -> PrefSeq:
    """Reflect only the components inside the window ``[a, b]``.

    ``a`` and ``b`` must be a left and a right endpoint of components of the
    backward-capable outcome; every component inside the window is carried
    onto the mirror position within the window, preferences outside it are
    untouched.
    """
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    if not _is_contained(prefs, n, k):
        raise NotContained("input must be a contained sequence")
    _, _, trav, _ = _sim_naples(prefs, n, k)
    comps = _merge_pairs(trav)
    if (
        a > b
        or not any(lo == a for lo, _ in comps)
        or not any(hi == b for _, hi in comps)
    ):
        raise EndpointNotComponentBoundary(
            f"[{a}, {b}] is not bounded by component endpoints of {comps}"
        )
    inner = [c for c in comps if a <= c[0] and c[1] <= b]
    out = []
    for p in prefs:
        for lo, hi in inner:
            if lo <= p <= hi:
                out.append(a + b - hi + (p - lo))
                break
        else:
            out.append(p)
    image = tuple(out)
    assert _is_contained(image, n, k), "window reflection left the contained family"
    return image
