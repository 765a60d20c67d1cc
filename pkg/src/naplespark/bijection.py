"""The staged correspondence between parking families.

``xi`` carries contained backward-capable sequences onto classical ones and
``xi_inverse`` undoes it; ``xi_bar`` extends the construction to every
backward-capable sequence, landing in the left-obstructed family on ``n+k``
vertices. All three build their result part by part over the alternating
decomposition, applying a full reflection each time a new part is appended.
"""

from __future__ import annotations

from typing import Iterable

from .core import KDecomposition, Lot, ParkMode, Part, PrefSeq, validate
from .errors import NotAParkingFunction, NotContained
from .reflections import iota, phi, phi_bar
from .rules import _check_k, _is_contained, _sim_classical, _sim_naples, is_contained


def k_decompose(prefs: Iterable[int], n: int, k: int) -> KDecomposition:
    """Split into maximal runs, alternating at-or-backward / forward parkers.

    The first car always parks at its preference, so the first part is always
    of the at-or-backward kind and parities line up with the run classes.
    """
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    _, failed, _, modes = _sim_naples(prefs, n, k)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    parts: list[Part] = []
    run_start, run_forward = 1, False
    for i, mode in enumerate(modes, 1):
        forward = mode is ParkMode.FORWARD
        if i == 1:
            run_forward = forward
            continue
        if forward != run_forward:
            parts.append(Part(run_start, i - run_start))
            run_start, run_forward = i, forward
    if modes:
        parts.append(Part(run_start, len(modes) + 1 - run_start))
    return KDecomposition(tuple(parts))


def _segments(prefs: PrefSeq, dec: KDecomposition) -> list[PrefSeq]:
    return [prefs[p.start - 1 : p.stop - 1] for p in dec.parts]


def xi(prefs: Iterable[int], n: int, k: int) -> PrefSeq:
    """Map a contained sequence to a classical one, part by part.

    Odd parts contribute mirrored preferences ``n+1-p``, even parts
    contribute ``p-k``; before each new part the configuration built so far
    is reflected. Cars of odd parts end up traversing at most ``k`` vertices
    in the image, cars of even parts more than ``k``.
    """
    prefs = tuple(prefs)
    if not is_contained(prefs, n, k):
        raise NotContained("input is not a contained sequence")
    dec = k_decompose(prefs, n, k)
    cur: PrefSeq = ()
    for i, seg in enumerate(_segments(prefs, dec), 1):
        nu = tuple(n + 1 - p for p in seg) if i % 2 else tuple(p - k for p in seg)
        cur = (phi(cur, n) if i > 1 else cur) + nu
    return cur


def xi_inverse(prefs: Iterable[int], n: int, k: int) -> PrefSeq:
    """Invert :func:`xi` by peeling uniform suffixes.

    Cars of the current tuple are classed by classical traverse length
    (at most ``k`` versus more); the maximal suffix of one class maps back
    (``p -> n+1-p`` for the short class, ``p -> p+k`` for the long one) and
    becomes the next part from the right, after which the remaining prefix is
    reflected and the loop repeats.
    """
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    _, failed, _, _ = _sim_classical(prefs, n)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    result: PrefSeq = ()
    cur = prefs
    while cur:
        spots, _, _, _ = _sim_classical(cur, n)
        short = [s - p <= k for p, s in zip(cur, spots)]
        cut = len(cur) - 1
        while cut > 0 and short[cut - 1] == short[-1]:
            cut -= 1
        mapped = tuple((n + 1 - p) if short[-1] else (p + k) for p in cur[cut:])
        result = mapped + result
        cur = phi(cur[:cut], n) if cut else ()
    return result


def xi_bar_stages(
    prefs: Iterable[int], n: int, k: int
) -> list[tuple[PrefSeq, Lot]]:
    """All construction stages of :func:`xi_bar`, the final one last.

    For a contained input there is a single stage, the shifted image of
    :func:`xi`. Otherwise stage 1 mirrors the first part on the bare
    ``n``-lot, stage 2 shifts into the ``n+k`` lot and appends the second
    part verbatim, and each later stage reflects the obstructed configuration
    before appending its part (mirrored for odd parts, verbatim for even
    ones); an odd number of parts ends with one extra reflection.
    """
    _check_k(k)
    prefs, _ = validate(prefs, Lot(n))
    _, failed, _, _ = _sim_naples(prefs, n, k)
    if failed is not None:
        raise NotAParkingFunction(f"car {failed} could not park")
    if _is_contained(prefs, n, k):
        return [iota(xi(prefs, n, k), n, k)]
    dec = k_decompose(prefs, n, k)
    segs = _segments(prefs, dec)
    stages: list[tuple[PrefSeq, Lot]] = []
    cur: PrefSeq = tuple(n + 1 - p for p in segs[0])
    lot = Lot(n)
    stages.append((cur, lot))
    for i in range(2, dec.d + 1):
        seg = segs[i - 1]
        if i == 2:
            cur, lot = iota(phi(cur, n), n, k)
            cur += seg
        elif i % 2:
            refl, lot = phi_bar(cur, lot)
            cur = refl + tuple(n + 1 - p for p in seg)
        else:
            refl, lot = phi_bar(cur, lot)
            cur = refl + seg
        stages.append((cur, lot))
    if dec.d % 2:
        stages.append(phi_bar(cur, lot))
    return stages


def xi_bar(prefs: Iterable[int], n: int, k: int) -> tuple[PrefSeq, Lot]:
    """Embed a backward-capable sequence into the left-obstructed family.

    Contained inputs go through :func:`xi` followed by :func:`iota`; the rest
    go through the staged construction, whose result parks on the ``n+k`` lot
    with the first ``k`` vertices obstructed. The map is injective: inputs
    whose backward searches would run off the lot are exactly those whose
    images prefer obstructed vertices.
    """
    return xi_bar_stages(prefs, n, k)[-1]
