import itertools

import pytest

from naplespark import (
    EndpointNotComponentBoundary,
    Interval,
    Lot,
    NotAParkingFunction,
    NotContained,
    iota,
    is_contained,
    park_classical,
    park_naples,
    park_obstructed,
    phi,
    phi_bar,
    phi_restricted,
)


class TestPhi:
    def test_worked_examples(self):
        assert phi((4, 9, 6, 8, 1, 8, 1, 2), 10) == (7, 2, 5, 1, 8, 1, 8, 9)
        assert phi((2, 3, 4, 2, 4, 7, 7, 8), 10) == (5, 6, 7, 5, 7, 2, 2, 3)

    def test_involution_on_example(self):
        f = (4, 9, 6, 8, 1, 8, 1, 2)
        assert phi(phi(f, 10), 10) == f

    def test_rejects_non_parking_input(self):
        with pytest.raises(NotAParkingFunction):
            phi((2, 2), 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_involution_preserves_lengths_and_mirrors_occupancy(self, n):
        for m in range(n + 1):
            for f in itertools.product(range(1, n + 1), repeat=m):
                before = park_classical(f, n)
                if not before.succeeded:
                    continue
                g = phi(f, n)
                after = park_classical(g, n)
                assert after.succeeded
                assert phi(g, n) == f
                for a, b in zip(before.cars, after.cars):
                    assert a.parked - a.preferred == b.parked - b.preferred
                assert after.occupied() == {n + 1 - v for v in before.occupied()}


class TestPhiBar:
    def test_worked_example(self):
        lot = Lot(14, Interval(7, 10))
        image, new_lot = phi_bar((1, 1, 11, 10, 10, 14, 6, 2, 4, 4), lot)
        assert image == (12, 12, 6, 5, 5, 1, 9, 13, 10, 10)
        assert new_lot == Lot(14, Interval(2, 5))

    def test_inner_stage_example(self):
        lot = Lot(14, Interval(9, 12))
        image, new_lot = phi_bar((7, 7, 4, 13, 9, 2, 1, 1), lot)
        assert image == (7, 7, 11, 5, 1, 13, 12, 12)
        assert new_lot == Lot(14, Interval(1, 4))

    def test_involution_on_example(self):
        lot = Lot(14, Interval(7, 10))
        f = (1, 1, 11, 10, 10, 14, 6, 2, 4, 4)
        image, new_lot = phi_bar(f, lot)
        assert phi_bar(image, new_lot) == (f, lot)

    def test_rejects_failure(self):
        with pytest.raises(NotAParkingFunction):
            phi_bar((3, 3, 1, 1, 6, 7, 8, 9, 8, 8), Lot(14, Interval(9, 12)))

    @pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2)])
    def test_involution_and_length_preservation(self, n, k):
        for start in range(1, n + 2):
            lot = Lot(n + k, Interval(start, start + k - 1))
            for m in range(n + 1):
                for f in itertools.product(range(1, n + k + 1), repeat=m):
                    before = park_obstructed(f, lot)
                    if not before.succeeded:
                        continue
                    image, new_lot = phi_bar(f, lot)
                    after = park_obstructed(image, new_lot)
                    assert after.succeeded
                    assert phi_bar(image, new_lot) == (f, lot)
                    for a, b in zip(before.cars, after.cars):
                        assert a.parked - a.preferred == b.parked - b.preferred


class TestIota:
    def test_shifts_and_obstructs(self):
        image, lot = iota((2, 2, 3, 4, 3, 2, 3, 3), 10, 4)
        assert image == (6, 6, 7, 8, 7, 6, 7, 7)
        assert lot == Lot(14, Interval(1, 4))

    def test_zero_shift_is_identity(self):
        assert iota((1, 2), 2, 0) == ((1, 2), Lot(2))

    def test_single_entry(self):
        assert iota((1,), 1, 2) == ((3,), Lot(3, Interval(1, 2)))

    def test_image_parks_left_obstructed(self):
        for f in itertools.product(range(1, 4), repeat=3):
            if not park_classical(f, 3).succeeded:
                continue
            image, lot = iota(f, 3, 2)
            assert park_obstructed(image, lot).succeeded

    def test_rejects_non_parking_input(self):
        with pytest.raises(NotAParkingFunction):
            iota((2, 2), 2, 1)


class TestPhiRestricted:
    def test_window_reflection(self):
        got = phi_restricted((5, 5, 5, 5, 4, 4, 8, 8), 10, 3, 1, 8)
        assert got == (7, 7, 7, 7, 6, 6, 2, 2)

    def test_self_mirrored_single_component(self):
        f = (6, 6, 6, 6, 5, 5, 4)
        assert phi_restricted(f, 10, 3, 1, 7) == f

    def test_preferences_outside_window_untouched(self):
        # components of (5,5,5,5,4,4,8,9,8) under k=3: (1..6), (7,8), (9)
        f = (5, 5, 5, 5, 4, 4, 8, 9, 8)
        got = phi_restricted(f, 11, 3, 1, 8)
        assert got == (7, 7, 7, 7, 6, 6, 2, 9, 2)

    def test_endpoints_must_bound_components(self):
        f = (5, 5, 5, 5, 4, 4, 8, 8)
        with pytest.raises(EndpointNotComponentBoundary):
            phi_restricted(f, 10, 3, 2, 8)
        with pytest.raises(EndpointNotComponentBoundary):
            phi_restricted(f, 10, 3, 1, 7)

    def test_rejects_uncontained_input(self):
        with pytest.raises(NotContained):
            phi_restricted((1, 1, 2), 3, 1, 1, 2)

    @pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (5, 2)])
    def test_preserves_containment_and_component_sizes(self, n, k):
        from naplespark import naples_components

        for f in itertools.product(range(1, n + 1), repeat=n):
            if not is_contained(f, n, k):
                continue
            comps = naples_components(park_naples(f, n, k))
            lows = [c.lo for c in comps]
            highs = [c.hi for c in comps]
            for a in lows:
                for b in highs:
                    if a > b:
                        continue
                    g = phi_restricted(f, n, k, a, b)
                    assert is_contained(g, n, k)
                    inner = sorted(len(c) for c in comps if a <= c.lo and c.hi <= b)
                    comps_g = naples_components(park_naples(g, n, k))
                    inner_g = sorted(len(c) for c in comps_g if a <= c.lo and c.hi <= b)
                    assert inner == inner_g
