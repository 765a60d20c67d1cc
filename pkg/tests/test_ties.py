import pytest
from hypothesis import given
from hypothesis import strategies as st

from naplespark import (
    Interval,
    NotContained,
    WrongTieCase,
    aim,
    boundary_cars,
    delta_ties,
    k_decompose,
    naples_components,
    out_tail,
    park_naples,
    psi_big,
    psi_small,
    stats,
    tcomp,
    xi,
)


class TestStats:
    def test_mixed(self):
        assert stats((2, 4, 8, 9, 2, 8, 9, 9, 9, 3)) == (5, 2, 2)

    def test_constant(self):
        assert stats((3, 3, 3)) == (0, 0, 2)

    def test_increasing(self):
        assert stats((1, 2, 3)) == (2, 0, 0)

    def test_empty_and_singleton(self):
        assert stats(()) == (0, 0, 0)
        assert stats((7,)) == (0, 0, 0)

    @given(st.lists(st.integers(1, 9), max_size=12))
    def test_pairs_partition(self, prefs):
        s = stats(prefs)
        assert s.ascents + s.descents + s.ties == max(len(prefs) - 1, 0)

    @given(st.lists(st.integers(1, 9), max_size=12))
    def test_reversal_swaps_ascents_and_descents(self, prefs):
        fwd, rev = stats(prefs), stats(tuple(reversed(prefs)))
        assert (fwd.ascents, fwd.descents, fwd.ties) == (rev.descents, rev.ascents, rev.ties)


class TestBoundaryCars:
    def test_four_parts(self):
        assert boundary_cars((5, 5, 5, 5, 4, 4, 8, 8, 8, 8), 10, 3) == (6, 7, 9)

    def test_wider_lot(self):
        assert boundary_cars((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, 3) == (6, 7, 10)

    def test_single_part(self):
        assert boundary_cars((1, 2, 3), 3, 1) == ()


class TestDeltaTies:
    @pytest.mark.parametrize(
        "f,n,expected",
        [
            ((6, 6, 6, 6, 5, 5, 4, 4), 10, (-1, 0, -1)),
            ((6, 6, 6, 6, 5, 6, 8, 8), 10, (1, 0, -1)),
            ((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, (-1, 0, -1)),
            ((5, 5, 5, 5, 4, 4, 8, 8, 8, 8), 10, (-1, 0, -1)),
        ],
    )
    def test_examples(self, f, n, expected):
        assert delta_ties(f, n, 3).entries == expected

    def test_rejects_uncontained(self):
        with pytest.raises(NotContained):
            delta_ties((1, 1, 2), 3, 1)


class TestTcomp:
    def test_concatenates_traversed_components(self):
        assert tcomp((5, 5, 5, 5, 4, 4, 8, 8, 8, 8), 10, 3, 9, 3) == Interval(1, 8)

    def test_excludes_components_right_of_the_preference(self):
        assert tcomp((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, 3, 10, 3) == Interval(1, 8)

    def test_isolated_preference_is_its_own_component(self):
        # car 7 parks at a vertex untouched by the two-part prefix
        f = (5, 5, 5, 5, 4, 4, 8, 8, 8, 8)
        assert tcomp(f, 10, 3, 7, 2) == Interval(8, 8)


class TestAim:
    def test_examples(self):
        assert aim((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, 3) == 4
        assert aim((6, 6, 6, 6, 5, 5, 4, 4), 10, 3) == 7
        assert aim((6, 6, 6, 6, 5, 5), 10, 3) == 6

    def test_retarget_creates_the_missing_tie(self):
        f = (6, 6, 6, 6, 5, 5)
        g = xi(psi_small(f, 10, 3), 10, 3)
        b = boundary_cars(f, 10, 3)[-1]
        assert g[b - 2] == g[b - 1]

    def test_wrong_case_rejected(self):
        assert delta_ties((7, 7, 7, 7, 6, 7), 10, 3).entries == (1,)
        with pytest.raises(WrongTieCase):
            aim((7, 7, 7, 7, 6, 7), 10, 3)  # last change is +1
        with pytest.raises(WrongTieCase):
            aim((2, 2, 2), 3, 1)  # last change is 0
        with pytest.raises(WrongTieCase):
            aim((1, 2, 3), 3, 1)  # single part


class TestPsiSmall:
    def test_worked_example(self):
        got = psi_small((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, 3)
        assert got == (7, 7, 7, 7, 6, 6, 2, 9, 2, 4)
        assert xi(got, 11, 3) == (3, 3, 3, 3, 4, 3, 1, 9, 1, 1)

    def test_fixes_zero_last_change(self):
        f = (2, 2, 2)  # decomposition (2,2) + (2); boundary pair never tied
        assert delta_ties(f, 3, 1).entries[-1] == 0
        assert psi_small(f, 3, 1) == f

    def test_involution_small(self, members):
        for f in members("CONTAINED", 3, 3, 1):
            assert psi_small(psi_small(f, 3, 1), 3, 1) == f

    def test_only_the_boundary_car_moves(self):
        # the bystander car 5 also prefers the re-aim target; dragging it
        # along would make the map non-injective
        f = (2, 2, 3, 3, 2)
        g = psi_small(f, 5, 1)
        assert g == (3, 3, 1, 2, 2)
        assert psi_small(g, 5, 1) == f
        assert psi_small((2, 2, 3, 3, 3), 5, 1) == (3, 3, 1, 2, 3)

    def test_negates_exactly_the_last_entry(self, members):
        for n, k in [(4, 1), (4, 2), (4, 3)]:
            for f in members("CONTAINED", 4, n, k):
                before = delta_ties(f, n, k).entries
                after = delta_ties(psi_small(f, n, k), n, k).entries
                assert after == before[:-1] + (-before[-1],) if before else after == ()


class TestOutTail:
    def test_single_retargeted_car(self):
        assert out_tail((5, 5, 5, 5, 4, 4, 8, 9, 8, 8), 11, 3) == (4,)

    def test_degenerate_returns_whole_tuple(self):
        assert out_tail((6, 6, 6, 6, 5), 10, 3) == (6, 6, 6, 6, 5)

    def test_zero_change_returns_last_part_verbatim(self):
        assert out_tail((2, 2, 2), 3, 1) == (2,)


class TestPsiBig:
    def test_worked_examples(self):
        f1 = (6, 6, 6, 6, 5, 5, 4, 4)
        assert psi_big(f1, 10, 3) == (6, 6, 6, 6, 5, 6, 4, 7)
        assert xi(psi_big(f1, 10, 3), 10, 3) == (1, 1, 1, 1, 2, 2, 4, 4)
        f2 = (6, 6, 6, 6, 5, 6, 8, 8)
        assert psi_big(f2, 10, 3) == (7, 7, 7, 7, 6, 6, 2, 5)
        assert xi(psi_big(f2, 10, 3), 10, 3) == (3, 3, 3, 3, 4, 3, 2, 2)

    def test_involution_small(self, members):
        for f in members("CONTAINED", 4, 4, 2):
            assert psi_big(psi_big(f, 4, 2), 4, 2) == f

    def test_negates_tie_changes_and_preserves_structure(self, members):
        for n, k in [(4, 1), (4, 3), (5, 2)]:
            for f in members("CONTAINED", n, n, k):
                g = psi_big(f, n, k)
                assert delta_ties(g, n, k) == delta_ties(f, n, k).negated()
                assert k_decompose(g, n, k).part_lengths() == k_decompose(f, n, k).part_lengths()
                out_f, out_g = park_naples(f, n, k), park_naples(g, n, k)
                assert out_g.occupied() == out_f.occupied()
                assert naples_components(out_g) == naples_components(out_f)
