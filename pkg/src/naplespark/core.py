"""Shared domain types for parking simulations on a directed path.

The lot is a directed path of ``total`` vertices labeled 1..total, optionally
with a block of consecutive obstructed vertices. All vertex labels and car
indices are 1-based throughout the package. A preference sequence is a plain
tuple of vertices; the empty sequence is a valid member of every family.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidLot, InvalidPreference

#: Car preferences, one 1-based vertex per car, in arrival order.
PrefSeq = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval of 1-based vertices; represents paths, components, blocks."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (1 <= self.lo <= self.hi):
            raise InvalidLot(f"invalid interval [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, vertex: int) -> bool:
        return self.lo <= vertex <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def covers(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


class ParkMode(str, enum.Enum):
    """How a car reached its spot relative to its preference."""

    AT = "at"
    BACKWARD = "backward"
    FORWARD = "forward"


@dataclass(frozen=True)
class Lot:
    """A directed path of ``total`` vertices with an optional obstructed block."""

    total: int
    obstruction: Optional[Interval] = None

    def __post_init__(self):
        if self.total < 0:
            raise InvalidLot(f"lot size must be >= 0, got {self.total}")
        ob = self.obstruction
        if ob is not None and ob.hi > self.total:
            raise InvalidLot(f"obstruction {ob} exceeds lot of {self.total} vertices")

    @property
    def free_capacity(self) -> int:
        ob = self.obstruction
        return self.total - (len(ob) if ob is not None else 0)

    def is_obstructed(self, vertex: int) -> bool:
        return self.obstruction is not None and vertex in self.obstruction


@dataclass(frozen=True)
class CarRecord:
    """One car's parking record.

    ``traverse`` is the interval of vertices the car visited before settling,
    including backward-checked vertices for backward-capable rules. It always
    contains the preference, and its right end is the rightmost of preference
    and spot.
    """

    preferred: int
    parked: int
    mode: ParkMode
    traverse: Interval

    def __post_init__(self):
        ok = (
            (self.mode is ParkMode.AT and self.parked == self.preferred)
            or (self.mode is ParkMode.BACKWARD and self.parked < self.preferred)
            or (self.mode is ParkMode.FORWARD and self.parked > self.preferred)
        )
        if not ok:
            raise InvalidLot(
                f"mode {self.mode.value} inconsistent with preference "
                f"{self.preferred} and spot {self.parked}"
            )
        if self.traverse.lo > min(self.preferred, self.parked) or self.traverse.hi != max(
            self.preferred, self.parked
        ):
            raise InvalidLot(f"traverse {self.traverse} inconsistent with {self}")


@dataclass(frozen=True)
class ParkOutcome:
    """Full trace of one simulation.

    On failure, ``failed_at`` is the 1-based index of the first car that could
    not park and ``cars`` holds the records of the cars parked before it.
    """

    lot: Lot
    cars: tuple[CarRecord, ...]
    failed_at: Optional[int] = None

    def __post_init__(self):
        if self.failed_at is not None:
            if self.failed_at != len(self.cars) + 1:
                raise InvalidLot(
                    f"failed_at={self.failed_at} does not follow the "
                    f"{len(self.cars)} parked cars"
                )
            return
        spots = [r.parked for r in self.cars]
        if len(set(spots)) != len(spots):
            raise InvalidLot("parked spots are not pairwise distinct")
        for r in self.cars:
            if not (1 <= r.parked <= self.lot.total) or self.lot.is_obstructed(r.parked):
                raise InvalidLot(f"car parked on unavailable vertex {r.parked}")

    @property
    def succeeded(self) -> bool:
        return self.failed_at is None

    @property
    def parked_spots(self) -> tuple[int, ...]:
        return tuple(r.parked for r in self.cars)

    @property
    def preferences(self) -> PrefSeq:
        return tuple(r.preferred for r in self.cars)

    def occupied(self) -> frozenset[int]:
        return frozenset(r.parked for r in self.cars)


@dataclass(frozen=True)
class Part:
    """One sub-tuple of a decomposition: cars ``start .. start+length-1``."""

    start: int
    length: int

    @property
    def stop(self) -> int:
        """First car index past this part."""
        return self.start + self.length


@dataclass(frozen=True)
class KDecomposition:
    """Partition of a sequence into maximal alternating runs.

    Odd-position parts hold cars that parked at or before their preference,
    even-position parts hold cars that parked after it; the first part is
    always of the at-or-before kind.
    """

    parts: tuple[Part, ...]

    def __post_init__(self):
        expect = 1
        for part in self.parts:
            if part.start != expect or part.length < 1:
                raise InvalidLot(f"parts are not a contiguous partition: {self.parts}")
            expect = part.stop

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def total_cars(self) -> int:
        return self.parts[-1].stop - 1 if self.parts else 0

    def part_lengths(self) -> tuple[int, ...]:
        return tuple(p.length for p in self.parts)

    def boundary_cars(self) -> tuple[int, ...]:
        """Global index of the first car of each part after the first."""
        return tuple(p.start for p in self.parts[1:])

    def prefix_length(self, parts: int) -> int:
        """Number of cars in the first ``parts`` parts."""
        if not (0 <= parts <= self.d):
            raise ValueError(f"prefix of {parts} parts out of range (d={self.d})")
        return self.parts[parts - 1].stop - 1 if parts else 0


@dataclass(frozen=True)
class TieChangeTuple:
    """Per-boundary record of ties gained (+1), lost (-1) or unchanged (0)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        for i, e in enumerate(self.entries, 1):
            if e not in (-1, 0, 1):
                raise InvalidLot(f"tie-change entries must be -1/0/+1, got {e}")
            if i % 2 == 0 and e != 0:
                raise InvalidLot(f"tie-change entry {i} must be 0, got {e}")

    def __len__(self) -> int:
        return len(self.entries)

    def negated(self) -> "TieChangeTuple":
        return TieChangeTuple(tuple(-e for e in self.entries))


def validate(prefs: Iterable[int], lot: Lot) -> tuple[PrefSeq, Lot]:
    """Check every preference lies on the lot; return the normalized pair."""
    out = tuple(prefs)
    for car, p in enumerate(out, 1):
        if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= lot.total:
            raise InvalidPreference(car, p)
    return out, lot


def as_prefs(values: Sequence[int]) -> PrefSeq:
    return tuple(int(v) for v in values)
