"""The seven example systems at canonical rational coordinates.

Each bundle carries the IFS, the seed arc set, the class its minimal set is
known to have, and the witnesses used by density and classification checks.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from circle import (
    Arc,
    ArcSet,
    CIRCLE,
    InfeasibleSlopes,
    InvalidGeometry,
    PLMap,
    arcset_to_dict,
    format_rational,
    pl_from_breakpoints,
    plmap_to_dict,
    prune_collinear,
)
from ifs import ClassName, IFSystem
from .gaps import gaps_to_depth, lemma4_homeomorphism
from .generators import (
    make_h,
    make_push_map,
    make_T_pair,
    make_three_branch,
    make_triadic_pair,
)

logger = logging.getLogger(__name__)

F = Fraction

DEFAULT_DEPTHS = {1: 8, 2: 6, 3: 8, 4: 8, 5: 8, 6: 8, 7: 6}

# shared Cantor set of Examples 1, 3 and 4
K_PRIME = Arc(F(1, 4), F(3, 4))
K_HOST = Arc(F(1, 8), F(7, 8))
# the squeeze of Examples 3 and 4
SQUEEZE_J = Arc(F(29, 32), F(31, 32))
SQUEEZE_J_PRIME = Arc(F(59, 64), F(61, 64))


@dataclass
class Witnesses:
    sample_points: List[Fraction] = field(default_factory=list)
    n_points: List[Fraction] = field(default_factory=list)
    interior_arcs: List[Arc] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'sample_points': [format_rational(p) for p in self.sample_points],
            'n_points': [format_rational(p) for p in self.n_points],
            'interior_arcs': [[format_rational(a.lo), format_rational(a.hi)] for a in self.interior_arcs],
        }


@dataclass
class ExampleBundle:
    number: int
    title: str
    ifs: IFSystem
    seed: ArcSet
    declared_class: ClassName
    witnesses: Witnesses
    depth: int
    constants: Dict[str, object] = field(default_factory=dict)
    maps: Dict[str, PLMap] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        constants = {}
        for name, value in self.constants.items():
            if isinstance(value, Arc):
                constants[name] = [format_rational(value.lo), format_rational(value.hi)]
            else:
                constants[name] = format_rational(value)
        return {
            'example': self.number,
            'title': self.title,
            'declared_class': self.declared_class.value,
            'default_depth': self.depth,
            'generators': {name: plmap_to_dict(g) for name, g in zip(self.ifs.names, self.ifs.generators)},
            'seed': arcset_to_dict(self.seed),
            'witnesses': self.witnesses.to_dict(),
            'constants': constants,
        }


@dataclass(frozen=True)
class Example7Params:
    """Coordinates of the Cantorval example; charts are generator words."""

    I_prime: Arc = Arc(F(1, 4), F(3, 4))
    I: Arc = Arc(F(1, 8), F(7, 8))
    a: Fraction = F(1, 4)
    b: Fraction = F(11, 20)
    c: Fraction = F(7, 20)
    d: Fraction = F(9, 20)
    x0: Fraction = F(27, 100)
    y0: Fraction = F(53, 100)
    plus_split: Fraction = F(1, 4)
    minus_split: Fraction = F(3, 4)
    gap_depth: int = 4
    match_depth: Optional[int] = None
    plus_charts: Tuple[Tuple[str, ...], Tuple[str, ...]] = (('f', 'f'), ('f',))
    minus_charts: Tuple[Tuple[str, ...], Tuple[str, ...]] = (('g', 'h'), ('g',))


def _circle_arc(lo, hi) -> ArcSet:
    return ArcSet.of(CIRCLE, [(lo, hi)])


def example7_psi(branches: IFSystem, params: Example7Params, direction: str) -> PLMap:
    """Gap-matching map K ∩ [a, x0] -> K ∩ [a, c] (plus) or K ∩ [y0, b] -> K ∩ [d, b] (minus)."""
    dom_chart, cod_chart = params.plus_charts if direction == 'plus' else params.minus_charts
    host = branches.meta['I_prime']
    gap0, gap1 = branches.meta['I0'], branches.meta['I1']
    dom = gaps_to_depth(branches, host, gap0, gap1, params.gap_depth, dom_chart)
    cod = gaps_to_depth(branches, host, gap0, gap1, params.gap_depth, cod_chart)
    return lemma4_homeomorphism(dom, cod, params.match_depth)


def make_example7_T(direction: str, params: Example7Params = Example7Params(),
                    branches: Optional[IFSystem] = None) -> PLMap:
    """T+ (direction 'plus') or T- ('minus') of the Cantorval example.

    T+ is the gap-matching map on [a, x0], r1 on [x0, c] onto [c, m+], r2 on
    [c, d] onto [m+, d] and identity elsewhere; T- is the mirror image on
    [c, b]. The split points m+ <= m- make T+([c,d]) ∪ T-([c,d]) = [c,d].
    """
    if direction not in ('plus', 'minus'):
        raise InvalidGeometry(f"direction must be 'plus' or 'minus', got {direction!r}")
    p = params
    if not (p.a < p.x0 < p.c < p.d < p.y0 < p.b):
        raise InvalidGeometry("need a < x0 < c < d < y0 < b")
    if not 0 < p.plus_split <= p.minus_split < 1:
        raise InfeasibleSlopes(f"splits {p.plus_split}, {p.minus_split} leave [c, d] uncovered")
    branches = branches or make_three_branch(p.I_prime, p.I)
    psi = example7_psi(branches, p, direction)
    width = p.d - p.c

    if direction == 'plus':
        if (psi.ambient.lo, psi.ambient.hi, psi.target.lo, psi.target.hi) != (p.a, p.x0, p.a, p.c):
            raise InvalidGeometry(f"gap matching runs {psi.ambient} -> {psi.target}, expected [a, x0] -> [a, c]")
        m = p.c + p.plus_split * width
        points = [(F(0), F(0))] + list(psi.breakpoints) + [(p.c, m), (p.d, p.d), (F(1), F(1))]
    else:
        if (psi.ambient.lo, psi.ambient.hi, psi.target.lo, psi.target.hi) != (p.y0, p.b, p.d, p.b):
            raise InvalidGeometry(f"gap matching runs {psi.ambient} -> {psi.target}, expected [y0, b] -> [d, b]")
        m = p.c + p.minus_split * width
        points = [(F(0), F(0)), (p.c, p.c), (p.d, m)] + list(psi.breakpoints) + [(F(1), F(1))]
    if points[1][0] == F(0):
        points.pop(0)
    return pl_from_breakpoints(prune_collinear(points), CIRCLE)


def _example1(finite: bool) -> ExampleBundle:
    if finite:
        push = make_push_map(K_PRIME, 'hi')
        ifs = IFSystem.of([('phi', push)])
        return ExampleBundle(
            1, "single push map, finite minimal set", ifs, ArcSet.points(CIRCLE, [K_PRIME.hi]),
            ClassName.FINITE, Witnesses(sample_points=[F(1, 2)], n_points=[K_PRIME.hi]),
            DEFAULT_DEPTHS[1], {'I_prime': K_PRIME}, {'phi': push})
    ifs = make_triadic_pair(K_PRIME, K_HOST)
    return ExampleBundle(
        1, "triadic pair, Cantor minimal set", ifs, _circle_arc(K_PRIME.lo, K_PRIME.hi),
        ClassName.CANTOR, Witnesses(sample_points=[F(1, 2), F(1, 4)]),
        DEFAULT_DEPTHS[1], {'I_prime': K_PRIME, 'I': K_HOST})


def _example2() -> ExampleBundle:
    I_prime = Arc(F(1, 8), F(7, 8))
    I = Arc(F(1, 16), F(15, 16))
    J = Arc(F(1, 4), F(7, 8))
    pair = make_T_pair(I_prime, I, slope=F(1, 2))
    # H1 fixes 1/4 and stretches J over the complement of I'; H2 fixes 3/8
    H1 = pl_from_breakpoints([(F(1, 4), F(1, 4)), (F(7, 8), F(9, 8)), (F(5, 4), F(5, 4))])
    H2 = pl_from_breakpoints([(F(3, 8), F(3, 8)), (F(7, 8), F(11, 16)), (F(9, 8), F(13, 16)),
                              (F(11, 8), F(11, 8))])
    ifs = IFSystem.of([('T+', pair['T+']), ('T-', pair['T-']), ('H1', H1), ('H2', H2)])
    samples = [F(0), F(1, 8), F(1, 3), F(1, 2), F(3, 4)]
    return ExampleBundle(
        2, "T pair with two transfer maps, the whole circle", ifs, _circle_arc(I_prime.lo, I_prime.hi),
        ClassName.WHOLE_SPACE, Witnesses(sample_points=samples, interior_arcs=[I_prime]),
        DEFAULT_DEPTHS[2], {'I_prime': I_prime, 'I': I, 'J': J}, {'H1': H1, 'H2': H2})


def _example3() -> ExampleBundle:
    triadic = make_triadic_pair(K_PRIME, K_HOST)
    I_prime = Arc(F(11, 24), F(13, 24))
    I = Arc(F(5, 12), F(7, 12))
    pair = make_T_pair(I_prime, I)
    h = make_h(SQUEEZE_J_PRIME, SQUEEZE_J, I_prime)
    ifs = IFSystem.of([('f', triadic['f']), ('g', triadic['g']), ('h', h),
                       ('T+', pair['T+']), ('T-', pair['T-'])])
    return ExampleBundle(
        3, "Cantor set, interval and orbit of the interval; N on the interior boundary", ifs,
        _circle_arc(I_prime.lo, I_prime.hi), ClassName.INTERIOR_CANTOR_N,
        Witnesses(sample_points=[F(1, 2)], n_points=[I_prime.lo, I_prime.hi], interior_arcs=[I_prime]),
        DEFAULT_DEPTHS[3],
        {'K_I_prime': K_PRIME, 'K_I': K_HOST, 'I_prime': I_prime, 'I': I, 'J': SQUEEZE_J, 'J_prime': SQUEEZE_J_PRIME},
        {'h': h})


def _example4() -> ExampleBundle:
    triadic = make_triadic_pair(K_PRIME, K_HOST)
    I_prime = Arc(F(11, 24), F(13, 24))
    a, b = I_prime.lo, I_prime.hi
    L = b - a
    I1 = Arc(a + L / 8, a + 3 * L / 16)
    I1_hat = Arc(a + L / 16, a + L / 4)
    phi = make_push_map(I_prime, 'hi')
    pair = make_T_pair(I1, I1_hat)
    h = make_h(SQUEEZE_J_PRIME, SQUEEZE_J, I1)
    ifs = IFSystem.of([('f', triadic['f']), ('g', triadic['g']), ('phi', phi), ('h', h),
                       ('T+', pair['T+']), ('T-', pair['T-'])])
    return ExampleBundle(
        4, "Cantor set, pushed interval chain and its limit point b", ifs, _circle_arc(I1.lo, I1.hi),
        ClassName.INTERIOR_CANTOR_N,
        Witnesses(sample_points=[F(1, 2)], n_points=[b, I1.lo, I1.hi], interior_arcs=[I1]),
        DEFAULT_DEPTHS[4],
        {'K_I_prime': K_PRIME, 'K_I': K_HOST, 'I_prime': I_prime, 'I1': I1, 'I1_hat': I1_hat,
         'J': SQUEEZE_J, 'J_prime': SQUEEZE_J_PRIME, 'b': b},
        {'phi': phi, 'h': h})


def _example5() -> ExampleBundle:
    psi = make_push_map(Arc(F(1, 4), F(3, 4)), 'hi')
    I0 = Arc(F(5, 16), F(3, 8))
    I1 = Arc(F(9, 32), F(13, 32))
    I = Arc(F(7, 8), F(15, 16))
    H = pl_from_breakpoints([(F(5, 16), F(7, 8)), (F(3, 8), F(15, 16)), (F(17, 32), F(49, 32)),
                             (F(15, 16), F(25, 16)), (F(21, 16), F(15, 8))])
    J = Arc(F(1, 32), F(5, 32))
    J_prime = Arc(F(1, 16), F(1, 8))
    h = make_h(J_prime, J, I0)
    pair = make_T_pair(I0, I1)
    ifs = IFSystem.of([('psi', psi), ('H', H), ('h', h), ('T+', pair['T+']), ('T-', pair['T-'])])
    return ExampleBundle(
        5, "union of intervals accumulating on a fixed point", ifs, _circle_arc(I0.lo, I0.hi),
        ClassName.INTERIOR_N,
        Witnesses(sample_points=[F(1, 2)], n_points=[F(3, 4)], interior_arcs=[I0, I]),
        DEFAULT_DEPTHS[5],
        {'I0': I0, 'I1': I1, 'I': I, 'J': J, 'J_prime': J_prime, 'sink': F(3, 4)},
        {'psi': psi, 'H': H, 'h': h})


def _example6() -> ExampleBundle:
    psi = make_push_map(Arc(F(0), F(1)), 'hi')
    I = Arc(F(1, 8), F(3, 16))
    I_prime = Arc(F(9, 64), F(11, 64))
    J = Arc(F(1, 32), F(3, 32))
    J_prime = Arc(F(3, 64), F(5, 64))
    h = make_h(J_prime, J, I_prime)
    pair = make_T_pair(I_prime, I)
    ifs = IFSystem.of([('psi', psi), ('h', h), ('T+', pair['T+']), ('T-', pair['T-'])])
    return ExampleBundle(
        6, "intervals pushed around the circle onto 0", ifs, _circle_arc(I_prime.lo, I_prime.hi),
        ClassName.INTERIOR_N,
        Witnesses(sample_points=[F(1, 2)], n_points=[F(0)], interior_arcs=[I_prime]),
        DEFAULT_DEPTHS[6],
        {'I': I, 'I_prime': I_prime, 'J': J, 'J_prime': J_prime},
        {'psi': psi, 'h': h})


def _example7(params: Example7Params = Example7Params()) -> ExampleBundle:
    branches = make_three_branch(params.I_prime, params.I)
    t_plus = make_example7_T('plus', params, branches)
    t_minus = make_example7_T('minus', params, branches)
    ifs = IFSystem.of([('f', branches['f']), ('g', branches['g']), ('h', branches['h']),
                       ('T+', t_plus), ('T-', t_minus)], meta=dict(branches.meta))
    I0 = branches.meta['I0']
    constants = {name: getattr(params, name) for name in ('a', 'b', 'c', 'd', 'x0', 'y0')}
    constants.update({'I_prime': params.I_prime, 'I': params.I, 'I0': I0, 'I1': branches.meta['I1']})
    return ExampleBundle(
        7, "symmetric Cantorval", ifs, _circle_arc(I0.lo, I0.hi), ClassName.CANTORVAL,
        Witnesses(sample_points=[F(1, 2)], interior_arcs=[I0]),
        DEFAULT_DEPTHS[7], constants, {'T+': t_plus, 'T-': t_minus})


def build_example(n: int, finite: bool = False) -> ExampleBundle:
    """Example n at canonical coordinates; ``finite`` selects the finite variant of Example 1."""
    builders = {
        1: lambda: _example1(finite),
        2: _example2,
        3: _example3,
        4: _example4,
        5: _example5,
        6: _example6,
        7: _example7,
    }
    if n not in builders:
        raise InvalidGeometry(f"no example {n}; choose 1..7")
    bundle = builders[n]()
    logger.debug("built example %d with %d generators", n, len(bundle.ifs))
    return bundle
