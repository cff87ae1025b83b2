"""Tests for gap families, the recursive gap matcher and the Cantorval T maps."""

import pytest

from circle import Arc, DepthExceedsData, InfeasibleSlopes, InvalidGeometry
from conftest import F
from constructions import (
    PRIMARY,
    SECONDARY,
    Example7Params,
    GapFamily,
    example7_psi,
    families_disjoint,
    gaps_to_depth,
    lemma4_homeomorphism,
    make_example7_T,
    match_gaps,
)

TRIADIC_GAP = Arc(F(5, 12), F(7, 12))


def triadic_families(triadic, depth):
    primary, _ = gaps_to_depth(triadic, Arc(F(1, 4), F(3, 4)), TRIADIC_GAP, TRIADIC_GAP, depth)
    return primary, GapFamily((), SECONDARY, primary.host)


@pytest.fixture(scope='module')
def cantorval_gaps(three_branch):
    def families(chart, depth=4):
        return gaps_to_depth(three_branch, three_branch.meta['I_prime'],
                             three_branch.meta['I0'], three_branch.meta['I1'], depth, chart)
    return families


class TestGapFamily:
    def test_sorted_on_construction(self):
        family = GapFamily((Arc(F(1, 2), F(5, 8)), Arc(F(1, 8), F(1, 4))), PRIMARY, Arc(0, 1))
        assert [g.lo for g in family.gaps] == [F(1, 8), F(1, 2)]

    def test_gap_outside_host(self):
        with pytest.raises(InvalidGeometry):
            GapFamily((Arc(F(1, 8), F(1, 4)),), PRIMARY, Arc(F(1, 4), F(3, 4)))

    def test_overlapping_gaps(self):
        with pytest.raises(InvalidGeometry):
            GapFamily((Arc(F(1, 8), F(1, 2)), Arc(F(1, 4), F(3, 4))), PRIMARY, Arc(0, 1))

    def test_unknown_tag(self):
        with pytest.raises(InvalidGeometry):
            GapFamily((), 'tertiary', Arc(0, 1))

    def test_triadic_gap_count(self, triadic):
        primary, _ = triadic_families(triadic, 3)
        assert len(primary) == 15
        assert primary.host == Arc(F(1, 4), F(3, 4))

    def test_charted_families_are_disjoint(self, cantorval_gaps):
        primary, secondary = cantorval_gaps(('f', 'f'))
        assert primary.host == Arc(F(1, 4), F(27, 100))
        assert len(primary) == len(secondary) == 121
        assert families_disjoint(primary, secondary)


class TestMatcher:
    def test_identical_inputs_give_identity(self, triadic):
        families = triadic_families(triadic, 3)
        psi = lemma4_homeomorphism(families, families)
        assert all(x == y for x, y in psi.breakpoints)
        xs = psi.xs
        assert all(a < b for a, b in zip(xs, xs[1:]))

    def test_depth_zero_matches_one_pair(self, triadic):
        families = triadic_families(triadic, 3)
        psi = lemma4_homeomorphism(families, families, depth=0)
        assert psi.breakpoints == (
            (F(1, 4), F(1, 4)),
            (F(5, 12), F(5, 12)),
            (F(7, 12), F(7, 12)),
            (F(3, 4), F(3, 4)),
        )

    def test_depth_beyond_data(self, triadic):
        families = triadic_families(triadic, 1)
        with pytest.raises(DepthExceedsData):
            match_gaps(families, families, depth=5)

    def test_gaps_missing_on_one_side(self, triadic):
        with pytest.raises(DepthExceedsData):
            match_gaps(triadic_families(triadic, 2), triadic_families(triadic, 1))

    def test_cantorval_matching(self, cantorval_gaps):
        domain = cantorval_gaps(('f', 'f'))
        codomain = cantorval_gaps(('f',))
        matching = match_gaps(domain, codomain)
        pairs = matching.sorted_pairs()
        assert len(pairs) >= 100

        by_tag = {family.family_tag: (set(family.gaps), set(other.gaps))
                  for family, other in zip(domain, codomain)}
        for dom, cod, tag, _ in pairs:
            assert dom in by_tag[tag][0]
            assert cod in by_tag[tag][1]

        for (d1, c1, _, _), (d2, c2, _, _) in zip(pairs, pairs[1:]):
            assert d1.hi < d2.lo
            assert c1.hi < c2.lo

        assert [p for p in matching.pairs if p[3] == 0] == [
            (Arc(F(1, 4) + F(1, 250), F(1, 4) + F(2, 250)), Arc(F(1, 4) + F(1, 50), F(1, 4) + F(2, 50)), PRIMARY, 0),
        ]

    def test_matched_gaps_map_onto_matched_gaps(self, cantorval_gaps):
        domain = cantorval_gaps(('f', 'f'))
        codomain = cantorval_gaps(('f',))
        matching = match_gaps(domain, codomain)
        psi = lemma4_homeomorphism(domain, codomain)
        for dom, cod, _, _ in matching.pairs:
            assert (psi(dom.lo), psi(dom.hi)) == (cod.lo, cod.hi)

    def test_modulus_shrinks_with_depth(self, cantorval_gaps):
        domain = cantorval_gaps(('f', 'f'), depth=5)
        codomain = cantorval_gaps(('f',), depth=5)
        moduli = [match_gaps(domain, codomain, depth=d).modulus() for d in range(2, 6)]
        assert all(b < a for a, b in zip(moduli, moduli[1:]))
        assert match_gaps(domain, codomain, depth=3).levels == 4


class TestCantorvalMaps:
    def test_psi_is_the_inverse_branch(self, three_branch):
        psi = example7_psi(three_branch, Example7Params(), 'plus')
        assert psi(F(1, 4)) == F(1, 4)
        assert psi(F(27, 100)) == F(7, 20)
        assert psi(F(13, 50)) == F(3, 10)

    def test_t_plus(self):
        t_plus = make_example7_T('plus')
        assert t_plus.breakpoints == (
            (F(0), F(0)),
            (F(1, 4), F(1, 4)),
            (F(27, 100), F(7, 20)),
            (F(7, 20), F(3, 8)),
            (F(9, 20), F(9, 20)),
            (F(1), F(1)),
        )

    def test_t_minus(self):
        t_minus = make_example7_T('minus')
        assert t_minus.breakpoints == (
            (F(0), F(0)),
            (F(7, 20), F(7, 20)),
            (F(9, 20), F(17, 40)),
            (F(53, 100), F(9, 20)),
            (F(11, 20), F(11, 20)),
            (F(1), F(1)),
        )

    def test_identity_outside_support(self):
        t_plus = make_example7_T('plus')
        for x in [F(0), F(1, 8), F(1, 4), F(9, 20), F(3, 4)]:
            assert t_plus(x) == x

    def test_images_cover_the_interval(self):
        c, d = F(7, 20), F(9, 20)
        t_plus, t_minus = make_example7_T('plus'), make_example7_T('minus')
        plus = (t_plus(c), t_plus(d))
        minus = (t_minus(c), t_minus(d))
        assert plus == (F(3, 8), d)
        assert minus == (c, F(17, 40))
        assert minus[1] >= plus[0]

    def test_unknown_direction(self):
        with pytest.raises(InvalidGeometry):
            make_example7_T('sideways')

    def test_coordinates_must_be_ordered(self):
        with pytest.raises(InvalidGeometry):
            make_example7_T('plus', Example7Params(x0=F(2, 5)))

    def test_splits_must_cover(self):
        with pytest.raises(InfeasibleSlopes):
            make_example7_T('plus', Example7Params(plus_split=F(3, 4), minus_split=F(1, 4)))
