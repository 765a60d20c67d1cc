import itertools

import pytest

from naplespark import (
    Interval,
    InvalidLot,
    Lot,
    NotAParkingFunction,
    naples_components,
    obstruction_components,
    park_classical,
    park_naples,
    park_obstructed,
    parking_components,
)


def ivs(pairs):
    return [Interval(lo, hi) for lo, hi in pairs]


class TestParkingComponents:
    def test_gaps_stay_out(self):
        out = park_classical((4, 9, 6, 8, 1, 8, 1, 2), 10)
        assert parking_components(out) == ivs([(1, 3), (4, 4), (6, 6), (8, 10)])

    def test_overlap_merging(self):
        out = park_classical((2, 3, 4, 2, 4, 7, 7, 8), 10)
        assert parking_components(out) == ivs([(2, 6), (7, 9)])

    def test_single_car(self):
        assert parking_components(park_classical((1,), 3)) == ivs([(1, 1)])

    def test_failed_outcome_rejected(self):
        with pytest.raises(NotAParkingFunction):
            parking_components(park_classical((2, 2), 2))


class TestNaplesComponents:
    def test_backward_traverses_extend_left(self):
        out = park_naples((4, 4, 7, 1, 1, 9, 10, 10, 1), 10, 4)
        assert naples_components(out) == ivs([(1, 5), (7, 7), (8, 10)])

    def test_prefix_of_longer_sequence(self):
        out = park_naples((5, 5, 5, 5, 4, 4, 8, 8), 10, 3)
        assert naples_components(out) == ivs([(1, 6), (7, 8)])

    def test_single_car(self):
        assert naples_components(park_naples((1,), 5, 2)) == ivs([(1, 1)])

    def test_failed_outcome_rejected(self):
        with pytest.raises(NotAParkingFunction):
            naples_components(park_naples((2, 3, 6, 9, 9, 6, 8, 9, 9), 10, 4))


class TestObstructionComponents:
    def test_block_merges_everything_it_touches(self):
        lot = Lot(14, Interval(7, 10))
        out = park_obstructed((1, 1, 11, 10, 10, 14, 6, 2, 4, 4), lot)
        assert obstruction_components(out, lot) == ivs(
            [(1, 3), (4, 5), (6, 6), (7, 13), (14, 14)]
        )

    def test_untouched_block_is_its_own_component(self):
        lot = Lot(6, Interval(5, 6))
        out = park_obstructed((1, 2), lot)
        assert obstruction_components(out, lot) == ivs([(1, 1), (2, 2), (5, 6)])

    def test_left_block(self):
        lot = Lot(14, Interval(1, 4))
        out = park_obstructed((7, 7, 11, 5, 1), lot)
        assert obstruction_components(out, lot) == ivs([(1, 6), (7, 8), (11, 11)])

    def test_lot_mismatch_rejected(self):
        lot = Lot(6, Interval(5, 6))
        out = park_obstructed((1, 2), lot)
        with pytest.raises(InvalidLot):
            obstruction_components(out, Lot(6, Interval(4, 5)))
        with pytest.raises(InvalidLot):
            obstruction_components(park_classical((1,), 6), Lot(6))


@pytest.mark.parametrize("n,k", [(4, 0), (4, 2), (5, 1), (5, 4)])
def test_component_structure_invariants(n, k):
    for m in range(n + 1):
        for prefs in itertools.product(range(1, n + 1), repeat=m):
            out = park_naples(prefs, n, k)
            if not out.succeeded:
                continue
            comps = naples_components(out)
            # sorted and pairwise disjoint
            for a, b in zip(comps, comps[1:]):
                assert a.hi < b.lo
            # union covers every parked spot, and each car parks inside the
            # component holding its preference
            for rec in out.cars:
                holder = [c for c in comps if rec.preferred in c]
                assert len(holder) == 1
                assert rec.parked in holder[0]


@pytest.mark.parametrize("start", range(1, 5))
def test_obstruction_component_contains_block(start):
    lot = Lot(6, Interval(start, start + 1))
    block = lot.obstruction
    for m in range(5):
        for prefs in itertools.product(range(1, 7), repeat=m):
            out = park_obstructed(prefs, lot)
            if not out.succeeded:
                continue
            comps = obstruction_components(out, lot)
            holders = [c for c in comps if c.covers(block)]
            assert len(holders) == 1
            partial = [c for c in comps if c.intersects(block) and not c.covers(block)]
            assert not partial
