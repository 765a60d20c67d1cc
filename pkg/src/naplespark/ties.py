"""Adjacent-pair statistics and the tie-balancing involutions.

The small involution ``psi_small`` flips the last entry of the tie-change
tuple by reflecting the components the last boundary car traverses and
re-aiming that car; the big involution ``psi_big`` repeats this from the
right, peeling one output tail per round, and negates the whole tuple.
Together they show the contained family and the classical family carry the
same total number of ties.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .bijection import k_decompose, xi
from .components import _merge_pairs
from .core import Interval, PrefSeq, TieChangeTuple
from .errors import NotContained, WrongTieCase
from .reflections import phi_restricted
from .rules import _sim_naples, is_contained


class Stats(NamedTuple):
    ascents: int
    descents: int
    ties: int


def stats(prefs: Iterable[int]) -> Stats:
    """Count ascents, descents and ties over adjacent pairs."""
    prefs = tuple(prefs)
    up = down = same = 0
    for a, b in zip(prefs, prefs[1:]):
        if a < b:
            up += 1
        elif a > b:
            down += 1
        else:
            same += 1
    return Stats(up, down, same)


def boundary_cars(prefs: Iterable[int], n: int, k: int) -> tuple[int, ...]:
    """Indices of the first car of each part after the first."""
    return k_decompose(prefs, n, k).boundary_cars()


def _require_contained(prefs: PrefSeq, n: int, k: int) -> None:
    if not is_contained(prefs, n, k):
        raise NotContained("input is not a contained sequence")


def delta_ties(prefs: Iterable[int], n: int, k: int) -> TieChangeTuple:
    """Tie changes at part boundaries between a sequence and its xi image.

    Entry ``i`` looks at the pair joining parts ``i`` and ``i+1``: +1 when the
    image gained a tie there, -1 when it lost one, 0 otherwise. Entries at
    even positions are always 0.
    """
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    image = xi(prefs, n, k)
    entries = []
    for b in k_decompose(prefs, n, k).boundary_cars():
        before = prefs[b - 2] == prefs[b - 1]
        after = image[b - 2] == image[b - 1]
        entries.append(0 if before == after else (1 if after else -1))
    return TieChangeTuple(tuple(entries))


def tcomp(
    prefs: Iterable[int], n: int, k: int, car: int, prefix_parts: int
) -> Interval:
    """Covering interval of the prefix components the car drives through.

    The car's traverse is taken in the full sequence; the components come
    from the restriction to the first ``prefix_parts`` parts. Components
    lying strictly right of the car's preference are excluded. A car whose
    traverse meets no prefix component yields the singleton at its
    preference.
    """
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    dec = k_decompose(prefs, n, k)
    if not 1 <= car <= len(prefs):
        raise ValueError(f"car {car} out of range")
    plen = dec.prefix_length(prefix_parts)
    _, _, trav, _ = _sim_naples(prefs, n, k)
    lo, hi = trav[car - 1]
    p_car = prefs[car - 1]
    _, _, prefix_trav, _ = _sim_naples(prefs[:plen], n, k)
    members = [
        c
        for c in _merge_pairs(prefix_trav)
        if c[0] <= hi and lo <= c[1] and c[0] <= p_car
    ]
    if not members:
        return Interval(p_car, p_car)
    return Interval(members[0][0], max(c[1] for c in members))


def _last_boundary_data(prefs: PrefSeq, n: int, k: int):
    """Shared setup for aim / psi_small: decomposition, image, window, prefix
    reflection, and the last tie-change entry."""
    dec = k_decompose(prefs, n, k)
    if dec.d < 2:
        return dec, None, None, None, None
    image = xi(prefs, n, k)
    b = dec.boundary_cars()[-1]
    e = 0
    before = prefs[b - 2] == prefs[b - 1]
    after = image[b - 2] == image[b - 1]
    if before != after:
        e = 1 if after else -1
    if e == 0:
        return dec, image, b, 0, None
    window = tcomp(prefs, n, k, b, dec.d - 1)
    prefix = prefs[: dec.prefix_length(dec.d - 1)]
    refl = phi_restricted(prefix, n, k, window.lo, window.hi)
    return dec, image, b, e, refl


def aim(prefs: Iterable[int], n: int, k: int) -> int:
    """The unique retarget making the last boundary pair a tie in the image.

    Defined when the last tie-change entry is -1: the reflected prefix gives
    the new preference of the car before the boundary, and the image's gap at
    the boundary pair is added on top.
    """
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    dec, image, b, e, refl = _last_boundary_data(prefs, n, k)
    if e != -1:
        raise WrongTieCase(f"last tie change is {e!r}, re-aiming needs -1")
    return refl[b - 2] + (image[b - 2] - image[b - 1])


def psi_small(prefs: Iterable[int], n: int, k: int) -> PrefSeq:
    """Involution negating the last tie-change entry and fixing the rest.

    Fixes the input when there is a single part or no tie change at the last
    boundary. Otherwise the prefix (all parts but the last) is reflected
    inside the boundary car's traversed window and the boundary car is
    re-aimed: at the new preference of the car before it when a tie was
    gained, at :func:`aim`'s vertex when one was lost. Occupied vertices,
    components and part lengths all survive.

    Only the boundary car moves. Re-aiming every last-part car that shares
    its preference looks equally natural but is not invertible: with tail
    (3, 2) and re-aim target 2 the new tail (2, 2) cannot be told apart from
    a re-aimed (3, 3), so the reverse pass would drag the bystander along.
    """
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    dec, image, b, e, refl = _last_boundary_data(prefs, n, k)
    if dec.d < 2 or e == 0:
        return prefs
    if e == 1:
        target = refl[b - 2]
    else:
        target = refl[b - 2] + (image[b - 2] - image[b - 1])
    return refl + (target,) + prefs[b:]


def out_tail(prefs: Iterable[int], n: int, k: int) -> PrefSeq:
    """Last part of ``psi_small``'s output (the whole tuple when d = 1)."""
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    dec = k_decompose(prefs, n, k)
    if dec.d < 2:
        return prefs
    out = psi_small(prefs, n, k)
    return out[len(out) - dec.parts[-1].length :]


def psi_big(prefs: Iterable[int], n: int, k: int) -> PrefSeq:
    """Involution negating the whole tie-change tuple.

    Round by round: apply ``psi_small``, split off the last part as an output
    tail, recurse on the rest; the tails, first removed rightmost, are glued
    back together. Each round's decomposition is re-derived and must agree in
    part lengths with the previous one.
    """
    prefs = tuple(prefs)
    _require_contained(prefs, n, k)
    cur = prefs
    tails: list[PrefSeq] = []
    while cur:
        dec = k_decompose(cur, n, k)
        step = psi_small(cur, n, k)
        assert (
            k_decompose(step, n, k).part_lengths() == dec.part_lengths()
        ), "tie flip changed the decomposition shape"
        cut = len(step) - dec.parts[-1].length
        tails.append(step[cut:])
        cur = step[:cut]
    result: PrefSeq = ()
    for tail in tails:
        result = tail + result
    return result
