"""Tests for the generator builders and the seven example bundles."""

import random

import pytest

from circle import (
    Ambient,
    Arc,
    ArcSet,
    CIRCLE,
    InfeasibleSlopes,
    InvalidGeometry,
    complement,
    has_fixed_point,
    image_arcset,
    is_subset,
    max_slope_on,
    membership,
    power,
    segment_slopes,
)
from conftest import F
from constructions import (
    build_example,
    make_contracting_triple_pair,
    make_h,
    make_push_map,
    make_three_branch,
    make_T_pair,
    make_triadic_pair,
    power_T_pair,
)
from ifs import (
    ClassName,
    assert_not_excluded,
    check_backward_property,
    check_forward_invariance,
    classify,
    decompose,
    density_level,
    iterate,
)

UNIT = Ambient.interval(0, 1)
I_HAT = Arc(F(1, 10), F(9, 10))
SUB = [Arc(F(1, 8), F(3, 8)), Arc(F(7, 16), F(9, 16)), Arc(F(5, 8), F(7, 8))]


@pytest.fixture(scope='module')
def contracting():
    return make_contracting_triple_pair(I_HAT, Arc(0, 1), SUB, F(1, 2))


def image(m, arc, ambient=CIRCLE):
    return image_arcset(m, ArcSet((arc,), ambient)).arcs[0]


def strictly_inside(inner, outer):
    return outer.lo < inner.lo and inner.hi < outer.hi


class TestTriadicPair:
    def test_branch_values(self, triadic):
        f, g = triadic['f'], triadic['g']
        assert f(F(3, 4)) == F(5, 12)
        assert f(F(1, 4)) == F(1, 4)
        assert g(F(3, 4)) == F(3, 4)
        assert f(F(15, 16)) == F(15, 16)

    def test_identity_outside_support(self, triadic):
        for m in triadic.generators:
            for x in [F(0), F(1, 16), F(1, 8), F(7, 8), F(31, 32)]:
                assert m(x) == x

    def test_slope_on_core(self, triadic):
        assert all(max_slope_on(m, Arc(F(1, 4), F(3, 4))) == F(1, 3) for m in triadic.generators)

    def test_needs_room_to_interpolate(self):
        with pytest.raises(InvalidGeometry):
            make_triadic_pair((F(1, 4), F(3, 4)), (F(1, 4), F(7, 8)))

    def test_backward_and_density_properties(self, triadic, I_prime):
        trace = iterate(triadic, I_prime, 6)
        for k in range(1, 7):
            assert check_backward_property(triadic, trace.levels[k], Arc(F(1, 4), F(3, 4)),
                                           within=trace.levels[k - 1])
        assert density_level(triadic, F(1, 2), trace.final, F(1, 100), 12) is not None


class TestThreeBranch:
    def test_gaps(self, three_branch):
        assert three_branch.meta['I0'] == Arc(F(7, 20), F(9, 20))
        assert three_branch.meta['I1'] == Arc(F(11, 20), F(13, 20))

    def test_branches(self, three_branch):
        assert three_branch['f'](F(1, 4)) == F(1, 4)
        assert three_branch['h'](F(3, 4)) == F(3, 4)
        assert image(three_branch['g'], Arc(F(1, 4), F(3, 4))) == Arc(F(9, 20), F(11, 20))

    def test_fresh_components_triple(self, three_branch, I_prime):
        trace = iterate(three_branch, I_prime, 5)
        assert [len(level) for level in trace.levels] == [3 ** k for k in range(6)]


class TestContractingPair:
    def test_f_breakpoints(self, contracting):
        assert contracting['f'].breakpoints == (
            (F(0), F(0)),
            (F(1, 8), F(10, 64)),
            (F(3, 8), F(12, 64)),
            (F(7, 16), F(35, 128)),
            (F(9, 16), F(37, 128)),
            (F(5, 8), F(29, 64)),
            (F(7, 8), F(31, 64)),
            (F(9, 10), F(1, 2)),
            (F(1), F(1)),
        )

    def test_inclusions(self, contracting):
        f, g = contracting['f'], contracting['g']
        left, mid, right = SUB
        assert left.lo <= image(f, left, UNIT).lo and image(f, left, UNIT).hi <= left.hi
        assert strictly_inside(image(f, mid, UNIT), left)
        assert strictly_inside(image(f, right, UNIT), mid)
        assert right.lo <= image(g, right, UNIT).lo and image(g, right, UNIT).hi <= right.hi
        assert strictly_inside(image(g, mid, UNIT), right)
        assert strictly_inside(image(g, left, UNIT), mid)
        assert image(g, left, UNIT) == Arc(F(33, 64), F(35, 64))

    def test_slopes_below_bound(self, contracting):
        for m in contracting.generators:
            for lo, hi, slope in segment_slopes(m):
                if any(arc.lo <= lo and hi <= arc.hi for arc in SUB):
                    assert slope < F(1, 2)

    def test_backward_property_on_window(self, contracting):
        seed = ArcSet.of(UNIT, [(a.lo, a.hi) for a in SUB])
        trace = iterate(contracting, seed, 6)
        for k in range(1, 7):
            assert check_backward_property(contracting, trace.levels[k], I_HAT, within=trace.levels[k - 1])
            assert check_forward_invariance(contracting, trace.levels[k])

    def test_density_from_gap_point(self, contracting):
        seed = ArcSet.of(UNIT, [(a.lo, a.hi) for a in SUB])
        trace = iterate(contracting, seed, 6)
        assert density_level(contracting, F(1, 2), trace.final, F(1, 100), 8) is not None

    def test_unreachable_slope_bound(self):
        with pytest.raises(InfeasibleSlopes):
            make_contracting_triple_pair(I_HAT, Arc(0, 1), SUB, F(3, 2))

    def test_sub_arcs_must_be_ordered(self):
        with pytest.raises(InvalidGeometry):
            make_contracting_triple_pair(I_HAT, Arc(0, 1), [SUB[1], SUB[0], SUB[2]], F(1, 2))


class TestTPair:
    def test_images_cover(self):
        pair = make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8)))
        assert image(pair['T-'], Arc(F(1, 4), F(3, 4))) == Arc(F(1, 4), F(5, 8))
        assert image(pair['T+'], Arc(F(1, 4), F(3, 4))) == Arc(F(3, 8), F(3, 4))
        assert pair['T-'](F(1, 4)) == F(1, 4)

    def test_iterates_approach_the_fixed_end(self):
        t_minus = make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8)))['T-']
        x = F(3, 4)
        for _ in range(8):
            nxt = t_minus(x)
            assert F(1, 4) < nxt < x
            x = nxt
        assert x - F(1, 4) < F(1, 10)

    def test_interval_is_invariant(self, I_prime):
        pair = make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8)))
        assert iterate(pair, I_prime, 4).levels == [I_prime] * 5

    @pytest.mark.parametrize('slope', [F(1, 3), F(1), F(5, 4)])
    def test_slope_range(self, slope):
        with pytest.raises(InfeasibleSlopes):
            make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8)), slope=slope)

    def test_powers(self):
        pair = make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8)))
        powered = power_T_pair(pair, 4)
        assert powered.names == ('T+^4', 'T-^4')
        assert powered.meta['slope'] == F(81, 256)
        assert powered['T-^4'] == power(pair['T-'], 4)


class TestSqueeze:
    J_PRIME = Arc(F(59, 64), F(61, 64))
    J = Arc(F(29, 32), F(31, 32))
    I = Arc(F(11, 24), F(13, 24))

    def test_identity_on_inner_arc(self):
        h = make_h(self.J_PRIME, self.J, self.I)
        for x in [F(59, 64), F(15, 16), F(61, 64)]:
            assert h(x) == x

    def test_complement_lands_in_target(self):
        h = make_h(self.J_PRIME, self.J, self.I)
        assert h(F(7, 16)) == F(1, 2)
        outside = complement(ArcSet.of(CIRCLE, [(self.J.lo, self.J.hi)]))
        assert is_subset(image_arcset(h, outside), ArcSet.of(CIRCLE, [(self.I.lo, self.I.hi)]))

    def test_degree_one(self):
        h = make_h(self.J_PRIME, self.J, self.I)
        (x0, y0), (x1, y1) = h.breakpoints[0], h.breakpoints[-1]
        assert (x1 - x0, y1 - y0) == (1, 1)

    def test_target_must_avoid_support(self):
        with pytest.raises(InvalidGeometry):
            make_h(self.J_PRIME, self.J, Arc(F(7, 8), F(15, 16)))

    def test_inner_arc_must_be_strictly_inside(self):
        with pytest.raises(InvalidGeometry):
            make_h(self.J, self.J, self.I)


class TestPushMap:
    def test_core_is_halving_toward_one(self):
        phi = make_push_map(Arc(0, 1), 'hi')
        x = F(1, 16)
        for _ in range(4):
            x = phi(x)
        assert x == 1 - F(15, 256)

    def test_moves_interior_toward_sink(self):
        up = make_push_map(Arc(F(1, 4), F(3, 4)), 'hi')
        down = make_push_map(Arc(F(1, 4), F(3, 4)), 'lo')
        for j in range(1, 32):
            x = F(1, 4) + F(j, 64)
            assert up(x) > x
            assert down(x) < x
        for m in (up, down):
            assert m(F(1, 4)) == F(1, 4)
            assert m(F(3, 4)) == F(3, 4)
            assert m(F(7, 8)) == F(7, 8)

    def test_bad_sink(self):
        with pytest.raises(InvalidGeometry):
            make_push_map(Arc(F(1, 4), F(3, 4)), 'middle')


class TestExampleBundles:
    def test_declared_classes(self, bundles):
        assert bundles(1).declared_class is ClassName.CANTOR
        assert bundles(1, finite=True).declared_class is ClassName.FINITE
        assert bundles(2).declared_class is ClassName.WHOLE_SPACE
        assert bundles(3).declared_class is ClassName.INTERIOR_CANTOR_N
        assert bundles(4).declared_class is ClassName.INTERIOR_CANTOR_N
        assert bundles(5).declared_class is ClassName.INTERIOR_N
        assert bundles(6).declared_class is ClassName.INTERIOR_N
        assert bundles(7).declared_class is ClassName.CANTORVAL

    def test_generator_counts(self, bundles):
        assert bundles(2).ifs.names == ('T+', 'T-', 'H1', 'H2')
        assert len(bundles(3).ifs) == 5
        assert len(bundles(7).ifs) == 5

    def test_unknown_example(self):
        with pytest.raises(InvalidGeometry):
            build_example(8)

    def test_example_2_transfer_maps(self, bundles):
        bundle = bundles(2)
        I_prime, J = bundle.constants['I_prime'], bundle.constants['J']
        assert I_prime.lo <= J.lo and J.hi <= I_prime.hi and J != I_prime
        J = ArcSet((J,), CIRCLE)
        outside = complement(bundle.seed)
        assert is_subset(outside, image_arcset(bundle.maps['H1'], J))
        assert is_subset(image_arcset(bundle.maps['H2'], outside), J)

    @pytest.mark.parametrize('n, finite', [(1, False), (1, True), (2, False), (3, False),
                                           (4, False), (5, False), (6, False), (7, False)])
    def test_every_generator_fixes_a_point(self, bundles, n, finite):
        ifs = bundles(n, finite=finite).ifs
        for name, g in zip(ifs.names, ifs.generators):
            assert has_fixed_point(g), name

    def test_builders_fix_points(self, contracting):
        systems = [
            make_triadic_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8))),
            make_T_pair((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8))),
            make_three_branch((F(1, 4), F(3, 4)), (F(1, 8), F(7, 8))),
            contracting,
        ]
        maps = [g for ifs in systems for g in ifs.generators]
        maps += [make_push_map(Arc(F(1, 4), F(3, 4)), 'lo'),
                 make_h(Arc(F(1, 16), F(1, 8)), Arc(F(1, 32), F(5, 32)), Arc(F(1, 2), F(3, 4)))]
        assert all(has_fixed_point(m) for m in maps)

    def test_example_2_first_level_is_the_circle(self, bundles):
        bundle = bundles(2)
        assert iterate(bundle.ifs, bundle.seed, 1).final.is_full

    def test_example_5_transfer_map(self, bundles):
        bundle = bundles(5)
        psi, H = bundle.maps['psi'], bundle.maps['H']
        I0 = ArcSet.of(CIRCLE, [(F(5, 16), F(3, 8))])
        I = ArcSet.of(CIRCLE, [(F(7, 8), F(15, 16))])
        first = image_arcset(psi, I0)
        assert first == ArcSet.of(CIRCLE, [(F(17, 32), F(9, 16))])
        assert image_arcset(H, I0) == I
        assert is_subset(image_arcset(H, I), first)
        pushed = first
        for _ in range(5):
            assert is_subset(image_arcset(H, pushed), first)
            pushed = image_arcset(psi, pushed)

    def test_example_4_push_clears_the_hat(self, bundles):
        c = bundles(4).constants
        phi = bundles(4).maps['phi']
        pushed = image(phi, c['I1'])
        assert pushed.lo > c['I1_hat'].hi

    def test_witness_arcs_lie_in_final_level(self, bundles):
        for n in (2, 3, 5, 6, 7):
            bundle = bundles(n)
            final = iterate(bundle.ifs, bundle.seed, 4).final
            for arc in bundle.witnesses.interior_arcs:
                assert is_subset(ArcSet((arc,), CIRCLE), final)

    def test_bundle_document(self, bundles):
        doc = bundles(3).to_dict()
        assert doc['example'] == 3
        assert doc['declared_class'] == 'InteriorPlusCantorPlusN_boundaryMeetsN'
        assert set(doc['generators']) == {'f', 'g', 'h', 'T+', 'T-'}
        assert doc['constants']['I_prime'] == ['11/24', '13/24']

    @pytest.mark.parametrize('n', [3, 4, 5, 6])
    def test_fresh_component_counts(self, bundles, n):
        bundle = bundles(n)
        counts = decompose(iterate(bundle.ifs, bundle.seed, 5)).cantor_evidence.component_count_growth
        expected = {
            3: [2 ** k for k in range(6)],
            4: [2 ** (k + 1) - 1 for k in range(6)],
            5: [1, 2, 1, 1, 1, 1],
            6: [1] * 6,
        }[n]
        assert list(counts) == expected


class TestPerturbations:
    def test_random_triadic_placements(self):
        rng = random.Random(1)
        for _ in range(100):
            lo = F(rng.randint(1, 12), 64)
            hi = F(rng.randint(50, 63), 64)
            inner_lo = lo + F(rng.randint(1, 4), 64)
            inner_hi = hi - F(rng.randint(1, 4), 64)
            ifs = make_triadic_pair((inner_lo, inner_hi), (lo, hi))
            seed = ArcSet.of(CIRCLE, [(inner_lo, inner_hi)])
            d = decompose(iterate(ifs, seed, 4))
            assert assert_not_excluded(d)
            assert classify(d, ClassName.CANTOR).name is ClassName.CANTOR

    def test_random_T_pairs(self):
        rng = random.Random(2)
        for _ in range(100):
            lo = F(rng.randint(1, 12), 64)
            hi = F(rng.randint(50, 63), 64)
            inner = (lo + F(rng.randint(1, 4), 64), hi - F(rng.randint(1, 4), 64))
            slope = F(rng.randint(32, 63), 64)
            pair = make_T_pair(inner, (lo, hi), slope=slope)
            d = decompose(iterate(pair, ArcSet.of(CIRCLE, [inner]), 3))
            assert assert_not_excluded(d)
            assert classify(d).name is ClassName.INTERIOR_N

    def test_random_three_branch_placements(self):
        rng = random.Random(3)
        for _ in range(100):
            lo = F(rng.randint(1, 12), 64)
            hi = F(rng.randint(50, 63), 64)
            core = Arc(lo + F(rng.randint(1, 4), 64), hi - F(rng.randint(1, 4), 64))
            ifs = make_three_branch(core, (lo, hi))
            fifth = (core.hi - core.lo) / 5
            for m, k in zip(ifs.generators, (0, 2, 4)):
                assert image(m, core) == Arc(core.lo + k * fifth, core.lo + (k + 1) * fifth)
                assert max_slope_on(m, core) == F(1, 5)
                assert m(lo) == lo and m(hi) == hi
            trace = iterate(ifs, ArcSet((core,), CIRCLE), 3)
            assert [len(level) for level in trace.levels] == [1, 3, 9, 27]
            for gap in (ifs.meta['I0'], ifs.meta['I1']):
                assert not membership(gap.midpoint, trace.levels[1])
            assert classify(decompose(trace), ClassName.CANTOR).name is ClassName.CANTOR

    def test_random_contracting_pairs(self):
        rng = random.Random(4)
        for _ in range(100):
            unit = F(1, 128)
            cursor = rng.randint(2, 8)
            hat_lo = cursor * unit
            sub = []
            for _ in range(3):
                width = rng.randint(4, 8)
                sub.append(Arc(cursor * unit + unit, (cursor + 1 + width) * unit))
                cursor += 1 + width + rng.randint(1, 8)
            I_hat = Arc(hat_lo, cursor * unit)
            lam = F(rng.randint(4, 12), 16)
            ifs = make_contracting_triple_pair(I_hat, Arc(0, 1), sub, lam)
            f, g = ifs['f'], ifs['g']
            left, mid, right = sub
            assert left.lo <= image(f, left, UNIT).lo and image(f, left, UNIT).hi <= left.hi
            assert strictly_inside(image(f, mid, UNIT), left)
            assert strictly_inside(image(f, right, UNIT), mid)
            assert right.lo <= image(g, right, UNIT).lo and image(g, right, UNIT).hi <= right.hi
            assert strictly_inside(image(g, mid, UNIT), right)
            assert strictly_inside(image(g, left, UNIT), mid)
            for m in (f, g):
                assert all(max_slope_on(m, arc) == lam / 4 for arc in sub)
            seed = ArcSet.of(UNIT, [(a.lo, a.hi) for a in sub])
            trace = iterate(ifs, seed, 3)
            assert [len(level) for level in trace.levels] == [3, 6, 12, 24]
            for k in range(1, 4):
                assert is_subset(trace.levels[k], trace.levels[k - 1])
                assert check_backward_property(ifs, trace.levels[k], I_hat, within=trace.levels[k - 1])
