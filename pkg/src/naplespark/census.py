"""Exhaustive enumerators, closed-form counters and claim verifiers.

Enumeration filters the full preference cube through the simulators in
lexicographic order, guarded by a configurable candidate cap. Counting is
exact integer arithmetic throughout. ``verify`` replays a named identity at
the given size and reports both sides plus any counterexamples.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, Optional

from .bijection import xi, xi_bar, xi_inverse
from .core import Interval, Lot, PrefSeq
from .errors import InvalidFamilyParams, TooLarge
from .reflections import iota
from .rules import (
    _is_contained,
    _sim_classical,
    _sim_naples,
    _sim_obstructed,
)
from .ties import stats

#: Default cap on the number of candidate sequences one call may scan.
CANDIDATE_GUARD = 10**8


class Family(str, enum.Enum):
    PF = "PF"  # forward-only rule
    NAPLES = "NAPLES"  # backward-capable rule
    CONTAINED = "CONTAINED"  # backward-capable, searches never leave the lot
    OPF = "OPF"  # forward-only with an obstructed block
    LPF = "LPF"  # forward-only with the leftmost block obstructed


class Claim(str, enum.Enum):
    BIJECTION = "bijection"
    TIES = "ties"
    INJECTION = "injection"
    RECURSION = "recursion"
    LPF_COUNT = "lpf-count"
    BOUND = "bound"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification run.

    ``ok`` means the claim held: equality of ``lhs`` and ``rhs`` with no
    counterexamples for every claim except ``bound``, where k >= 1 demands a
    strict ``lhs < rhs`` and k = 0 equality.
    """

    claim: str
    params: dict[str, int]
    lhs: int
    rhs: int
    ok: bool
    counterexamples: tuple[PrefSeq, ...] = field(default=())

    MAX_COUNTEREXAMPLES = 10


def _family_setup(
    family: Family,
    m: int,
    n: int,
    k: Optional[int],
    obstruction_start: Optional[int],
) -> tuple[int, Callable[[PrefSeq], bool]]:
    """Validate parameters; return lot size and the membership predicate."""
    if m < 0 or n < 0 or m > n:
        raise InvalidFamilyParams(f"need 0 <= m <= n, got m={m}, n={n}")
    if family is Family.PF:
        if k is not None or obstruction_start is not None:
            raise InvalidFamilyParams("PF takes no k or obstruction parameters")
        return n, lambda f: _sim_classical(f, n)[1] is None
    if family in (Family.NAPLES, Family.CONTAINED):
        if k is None or k < 0 or obstruction_start is not None:
            raise InvalidFamilyParams(f"{family.value} needs k >= 0 and no obstruction")
        if family is Family.NAPLES:
            return n, lambda f: _sim_naples(f, n, k)[1] is None
        return n, lambda f: _is_contained(f, n, k)
    if family is Family.OPF:
        if k is None or k < 1:
            raise InvalidFamilyParams("OPF needs an obstruction of length k >= 1")
        if obstruction_start is None or not 1 <= obstruction_start <= n + 1:
            raise InvalidFamilyParams(
                f"OPF obstruction start must lie in [1, {n + 1}]"
            )
        lo, hi = obstruction_start, obstruction_start + k - 1
        return n + k, lambda f: _sim_obstructed(f, n + k, lo, hi)[1] is None
    if family is Family.LPF:
        if k is None or k < 0:
            raise InvalidFamilyParams("LPF needs k >= 0")
        if obstruction_start not in (None, 1):
            raise InvalidFamilyParams("LPF obstruction always starts at vertex 1")
        if k == 0:
            return n, lambda f: _sim_classical(f, n)[1] is None
        return n + k, lambda f: _sim_obstructed(f, n + k, 1, k)[1] is None
    raise InvalidFamilyParams(f"unknown family {family!r}")


def _scan_block(
    first: int, m: int, total: int, pred: Callable[[PrefSeq], bool]
) -> list[PrefSeq]:
    vertices = range(1, total + 1)
    if m == 1:
        return [(first,)] if pred((first,)) else []
    return [
        (first,) + rest
        for rest in itertools.product(vertices, repeat=m - 1)
        if pred((first,) + rest)
    ]


def enumerate_family(
    family: Family | str,
    m: int,
    n: int,
    k: Optional[int] = None,
    obstruction_start: Optional[int] = None,
    *,
    max_candidates: Optional[int] = CANDIDATE_GUARD,
    threads: int = 1,
) -> Iterator[PrefSeq]:
    """Stream the family's members in lexicographic order, duplicate-free.

    ``n`` is always the count of parkable vertices; obstructed families live
    on ``n + k`` vertices. ``max_candidates`` bounds the scanned cube
    (``None`` lifts the guard); ``threads > 1`` partitions the scan on the
    first preference and merges blocks in order, so output is identical
    regardless of scheduling.
    """
    try:
        family = Family(family)
    except ValueError:
        raise InvalidFamilyParams(f"unknown family {family!r}") from None
    total, pred = _family_setup(family, m, n, k, obstruction_start)
    if max_candidates is not None and total**m > max_candidates:
        raise TooLarge(
            f"{total}^{m} candidates exceed the cap of {max_candidates}"
        )
    if m == 0:
        yield ()
        return
    if threads <= 1 or total == 1:
        vertices = range(1, total + 1)
        for f in itertools.product(vertices, repeat=m):
            if pred(f):
                yield f
        return
    with ThreadPoolExecutor(max_workers=min(threads, total)) as pool:
        futures = [
            pool.submit(_scan_block, first, m, total, pred)
            for first in range(1, total + 1)
        ]
        for future in futures:
            yield from future.result()


def count_classical(m: int, n: int) -> int:
    """(n-m+1)(n+1)^(m-1) forward-only sequences; m = 0 counts the empty one."""
    if m < 0 or n < 0 or m > n:
        raise InvalidFamilyParams(f"need 0 <= m <= n, got m={m}, n={n}")
    if m == 0:
        return 1
    return (n - m + 1) * (n + 1) ** (m - 1)


def count_contained(n: int) -> int:
    """(n+1)^(n-1) contained sequences with n cars, independent of the
    backup limit."""
    if n < 0:
        raise InvalidFamilyParams(f"need n >= 0, got {n}")
    if n == 0:
        return 1
    return (n + 1) ** (n - 1)


def count_lpf(n: int, k: int) -> int:
    """(k+1)(k+n+1)^(n-1) left-obstructed sequences with n cars on n+k
    vertices."""
    if n < 0 or k < 0:
        raise InvalidFamilyParams(f"need n >= 0 and k >= 0, got n={n}, k={k}")
    if n == 0:
        return 1
    return (k + 1) * (k + n + 1) ** (n - 1)


@lru_cache(maxsize=None)
def _contained_count_by_enumeration(j: int, k: int) -> int:
    if j == 0:
        return 1
    if j**j > CANDIDATE_GUARD:
        raise TooLarge(f"{j}^{j} candidates exceed the cap of {CANDIDATE_GUARD}")
    return sum(1 for f in itertools.product(range(1, j + 1), repeat=j) if _is_contained(f, j, k))


@lru_cache(maxsize=None)
def _naples_count_recursive(n: int, k: int) -> int:
    if n == 0:
        return 1
    prev = n - 1
    return sum(
        comb(prev, i)
        * min(i + 1 + k, prev + 1)
        * _naples_count_recursive(i, k)
        * _contained_count_by_enumeration(prev - i, k)
        for i in range(prev + 1)
    )


def naples_count_recursive(n: int, k: int) -> int:
    """Count backward-capable sequences with n cars on n vertices via the
    binomial recursion, with contained counts supplied by enumeration."""
    if n < 0 or k < 0:
        raise InvalidFamilyParams(f"need n >= 0 and k >= 0, got n={n}, k={k}")
    return _naples_count_recursive(n, k)


def _ties_total(members: Iterator[PrefSeq]) -> int:
    return sum(stats(f).ties for f in members)


def _report(claim, params, lhs, rhs, ok, counterexamples=()):
    capped = tuple(counterexamples[: VerifyReport.MAX_COUNTEREXAMPLES])
    return VerifyReport(claim.value, dict(params), lhs, rhs, ok and not counterexamples, capped)


def _require_k_below_n(n: int, k: int) -> None:
    """These identities are stated for backup limits below the lot size."""
    if not (n >= 1 and 0 <= k <= n - 1):
        raise InvalidFamilyParams(f"claim needs n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")


def _verify_bijection(m, n, k, cap, threads) -> VerifyReport:
    _require_k_below_n(n, k)
    members = list(
        enumerate_family(Family.CONTAINED, m, n, k, max_candidates=cap, threads=threads)
    )
    expected = count_classical(m, n)
    bad: list[PrefSeq] = []
    images = set()
    for f in members:
        g = xi(f, n, k)
        parks = _sim_classical(g, n)[1] is None
        if not parks or g in images or xi_inverse(g, n, k) != f:
            bad.append(f)
        images.add(g)
    ok = len(members) == expected == len(images)
    return _report(Claim.BIJECTION, {"m": m, "n": n, "k": k}, len(members), expected, ok, bad)


def _verify_ties(m, n, k, cap, threads) -> VerifyReport:
    _require_k_below_n(n, k)
    lhs = _ties_total(
        enumerate_family(Family.CONTAINED, m, n, k, max_candidates=cap, threads=threads)
    )
    rhs = _ties_total(
        enumerate_family(Family.PF, m, n, max_candidates=cap, threads=threads)
    )
    return _report(Claim.TIES, {"m": m, "n": n, "k": k}, lhs, rhs, lhs == rhs)


def _verify_injection(m, n, k, cap, threads) -> VerifyReport:
    if k < 0:
        raise InvalidFamilyParams(f"need k >= 0, got {k}")
    expected_lot = Lot(n + k, Interval(1, k) if k else None)
    members = list(
        enumerate_family(Family.NAPLES, m, n, k, max_candidates=cap, threads=threads)
    )
    bad: list[PrefSeq] = []
    images = set()
    for f in members:
        image, lot = xi_bar(f, n, k)
        ob = lot.obstruction
        parks = (
            _sim_obstructed(image, lot.total, ob.lo, ob.hi)[1] is None
            if ob is not None
            else _sim_classical(image, lot.total)[1] is None
        )
        agrees = True
        if _is_contained(f, n, k):
            agrees = (image, lot) == iota(xi(f, n, k), n, k)
        if lot != expected_lot or not parks or image in images or not agrees:
            bad.append(f)
        images.add(image)
    ok = len(images) == len(members)
    return _report(
        Claim.INJECTION, {"m": m, "n": n, "k": k}, len(members), len(images), ok, bad
    )


def _brute_naples_count(n, k, cap, threads) -> int:
    return sum(
        1
        for _ in enumerate_family(
            Family.NAPLES, n, n, k, max_candidates=cap, threads=threads
        )
    )


def _verify_recursion(n, k, cap, threads) -> VerifyReport:
    _require_k_below_n(n, k)
    lhs = naples_count_recursive(n, k)
    rhs = _brute_naples_count(n, k, cap, threads)
    return _report(Claim.RECURSION, {"n": n, "k": k}, lhs, rhs, lhs == rhs)


def _verify_lpf_count(n, k, cap, threads) -> VerifyReport:
    if n < 1 or k < 0:
        raise InvalidFamilyParams(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    lhs = sum(
        1
        for _ in enumerate_family(
            Family.LPF, n, n, k, max_candidates=cap, threads=threads
        )
    )
    rhs = count_lpf(n, k)
    return _report(Claim.LPF_COUNT, {"n": n, "k": k}, lhs, rhs, lhs == rhs)


def _verify_bound(n, k, cap, threads) -> VerifyReport:
    _require_k_below_n(n, k)
    lhs = _brute_naples_count(n, k, cap, threads)
    rhs = count_lpf(n, k)
    ok = lhs == rhs if k == 0 else lhs < rhs
    return _report(Claim.BOUND, {"n": n, "k": k}, lhs, rhs, ok)


def verify(
    claim: Claim | str,
    m: Optional[int] = None,
    n: Optional[int] = None,
    k: Optional[int] = None,
    *,
    max_candidates: Optional[int] = CANDIDATE_GUARD,
    threads: int = 1,
) -> VerifyReport:
    """Replay one named identity exhaustively and report the evidence."""
    try:
        claim = Claim(claim)
    except ValueError:
        raise InvalidFamilyParams(f"unknown claim {claim!r}") from None
    if n is None:
        raise InvalidFamilyParams("every claim needs n")
    needs_m = claim in (Claim.BIJECTION, Claim.TIES, Claim.INJECTION)
    if needs_m and m is None:
        raise InvalidFamilyParams(f"claim {claim.value} needs m")
    if not needs_m and m is not None:
        raise InvalidFamilyParams(f"claim {claim.value} takes no m")
    if k is None:
        raise InvalidFamilyParams("every claim needs k")
    if claim is Claim.BIJECTION:
        return _verify_bijection(m, n, k, max_candidates, threads)
    if claim is Claim.TIES:
        return _verify_ties(m, n, k, max_candidates, threads)
    if claim is Claim.INJECTION:
        return _verify_injection(m, n, k, max_candidates, threads)
    if claim is Claim.RECURSION:
        return _verify_recursion(n, k, max_candidates, threads)
    if claim is Claim.LPF_COUNT:
        return _verify_lpf_count(n, k, max_candidates, threads)
    return _verify_bound(n, k, max_candidates, threads)
