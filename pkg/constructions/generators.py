"""Generator families: affine branches on I', the T pair, the squeeze h and
push maps. Every map is identity outside its support and is returned
validated and pruned.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from circle import (
    Ambient,
    Arc,
    CIRCLE,
    InfeasibleSlopes,
    InvalidGeometry,
    NotAHomeomorphism,
    PLMap,
    power,
    pl_from_breakpoints,
    prune_collinear,
    to_rational,
)
from ifs import IFSystem

logger = logging.getLogger(__name__)

ArcLike = Union[Arc, Tuple]
Points = List[Tuple[Fraction, Fraction]]


def as_arc(value: ArcLike) -> Arc:
    if isinstance(value, Arc):
        return value
    lo, hi = value
    return Arc(to_rational(lo), to_rational(hi))


def _require_strictly_inside(inner: Arc, outer: Arc, what: str):
    if inner.wraps or outer.wraps:
        raise InvalidGeometry(f"{what}: wrapped arcs are not supported")
    if not (outer.lo < inner.lo < inner.hi < outer.hi):
        raise InvalidGeometry(f"{what}: {inner} is not strictly inside {outer}")


def _require_in_ambient(arc: Arc, ambient: Ambient, what: str):
    if not (ambient.lo <= arc.lo < arc.hi <= ambient.hi):
        raise InvalidGeometry(f"{what}: {arc} is not a nontrivial arc of {ambient}")


def embed_identity(points: Points, ambient: Ambient) -> PLMap:
    """Extend breakpoints on a support by the identity up to the ambient ends."""
    points = list(points)
    if points[0][0] > ambient.lo:
        points.insert(0, (ambient.lo, ambient.lo))
    if points[-1][0] < ambient.hi:
        points.append((ambient.hi, ambient.hi))
    return pl_from_breakpoints(prune_collinear(points), ambient)


def _branch(I_prime: Arc, I: Arc, lo: Fraction, hi: Fraction, ambient: Ambient) -> PLMap:
    """Affine map of I' onto [lo, hi], identity outside I, linear in between."""
    return embed_identity([(I.lo, I.lo), (I_prime.lo, lo), (I_prime.hi, hi), (I.hi, I.hi)], ambient)


def _check_support(I_prime: ArcLike, I: ArcLike, ambient: Ambient) -> Tuple[Arc, Arc]:
    I_prime, I = as_arc(I_prime), as_arc(I)
    _require_in_ambient(I, ambient, "support")
    _require_strictly_inside(I_prime, I, "I' in I")
    return I_prime, I


def make_triadic_pair(I_prime: ArcLike, I: ArcLike, ambient: Ambient = CIRCLE) -> IFSystem:
    """f, g of slope 1/3 on I' fixing its left and right endpoint."""
    I_prime, I = _check_support(I_prime, I, ambient)
    a, b = I_prime.lo, I_prime.hi
    third = (b - a) / 3
    f = _branch(I_prime, I, a, a + third, ambient)
    g = _branch(I_prime, I, b - third, b, ambient)
    return IFSystem.of([('f', f), ('g', g)], meta={
        'I_prime': I_prime, 'I': I, 'gap': Arc(a + third, b - third), 'slope': Fraction(1, 3),
    })


def make_three_branch(I_prime: ArcLike, I: ArcLike, ambient: Ambient = CIRCLE) -> IFSystem:
    """f, g, h of slope 1/5 onto the first, third and fifth fifth of I'.

    The second and fourth fifths are the gaps I0 and I1.
    """
    I_prime, I = _check_support(I_prime, I, ambient)
    a = I_prime.lo
    fifth = (I_prime.hi - a) / 5
    f = _branch(I_prime, I, a, a + fifth, ambient)
    g = _branch(I_prime, I, a + 2 * fifth, a + 3 * fifth, ambient)
    h = _branch(I_prime, I, a + 4 * fifth, a + 5 * fifth, ambient)
    return IFSystem.of([('f', f), ('g', g), ('h', h)], meta={
        'I_prime': I_prime,
        'I': I,
        'I0': Arc(a + fifth, a + 2 * fifth),
        'I1': Arc(a + 3 * fifth, a + 4 * fifth),
        'slope': Fraction(1, 5),
    })


# centers of the images, as fractions of the arc they land in
F_PLACEMENT = (Fraction(3, 16), Fraction(5, 8), Fraction(1, 4))


def _centered(target: Arc, fraction: Fraction, half_width: Fraction) -> Tuple[Fraction, Fraction]:
    center = target.lo + fraction * (target.hi - target.lo)
    return center - half_width, center + half_width


def make_contracting_triple_pair(I_hat: ArcLike, I: ArcLike, sub: Sequence[ArcLike],
                                 lambda_bound: Fraction = Fraction(1, 2),
                                 ambient: Ambient = None) -> IFSystem:
    """Pair f, g contracting three arcs I_{-1} < I_0 < I_1 inside Î.

    f(I_{-1}) ⊂ I_{-1}, f(I_0) ⊂ int I_{-1}, f(I_1) ⊂ int I_0 and the mirrored
    inclusions for g; both have slope lambda_bound / 4 on the three arcs.
    """
    I_hat, I = as_arc(I_hat), as_arc(I)
    ambient = ambient or Ambient.interval(0, 1)
    lambda_bound = to_rational(lambda_bound)
    if not 0 < lambda_bound < 1:
        raise InfeasibleSlopes(f"slope bound {lambda_bound} must lie in (0, 1)")
    if len(sub) != 3:
        raise InvalidGeometry("need exactly three sub-arcs")
    left, mid, right = (as_arc(s) for s in sub)
    _require_in_ambient(I, ambient, "support")
    _require_strictly_inside(I_hat, I, "Î in I")
    if not (I_hat.lo < left.lo < left.hi < mid.lo < mid.hi < right.lo < right.hi < I_hat.hi):
        raise InvalidGeometry("sub-arcs must be disjoint, ordered and inside Î")

    s = lambda_bound / 4
    half = [s * (arc.hi - arc.lo) / 2 for arc in (left, mid, right)]
    f_images = [
        _centered(left, F_PLACEMENT[0], half[0]),
        _centered(left, F_PLACEMENT[1], half[1]),
        _centered(mid, F_PLACEMENT[2], half[2]),
    ]
    g_images = [
        _centered(mid, 1 - F_PLACEMENT[2], half[0]),
        _centered(right, 1 - F_PLACEMENT[1], half[1]),
        _centered(right, 1 - F_PLACEMENT[0], half[2]),
    ]
    if not f_images[2][1] < g_images[0][0]:
        raise InfeasibleSlopes("f(I_1) and g(I_-1) overlap inside I_0")
    middle = (f_images[2][1] + g_images[0][0]) / 2

    def inside(image, arc, strict):
        if strict:
            return arc.lo < image[0] and image[1] < arc.hi
        return arc.lo <= image[0] and image[1] <= arc.hi

    inclusions = [
        inside(f_images[0], left, False), inside(f_images[1], left, True), inside(f_images[2], mid, True),
        inside(g_images[2], right, False), inside(g_images[1], right, True), inside(g_images[0], mid, True),
    ]
    if not all(inclusions):
        raise InfeasibleSlopes(f"slope {s} cannot realize the contracting inclusions")

    f_points = [(I.lo, I.lo)]
    for arc, (lo, hi) in zip((left, mid, right), f_images):
        f_points += [(arc.lo, lo), (arc.hi, hi)]
    f_points += [(I_hat.hi, middle), (I.hi, I.hi)]
    g_points = [(I.lo, I.lo), (I_hat.lo, middle)]
    for arc, (lo, hi) in zip((left, mid, right), g_images):
        g_points += [(arc.lo, lo), (arc.hi, hi)]
    g_points.append((I.hi, I.hi))
    try:
        f = embed_identity(f_points, ambient)
        g = embed_identity(g_points, ambient)
    except NotAHomeomorphism as e:
        raise InfeasibleSlopes(f"placement is not monotone: {e}") from e
    logger.debug("contracting pair with slope %s on %s, %s, %s", s, left, mid, right)
    return IFSystem.of([('f', f), ('g', g)], meta={
        'I_hat': I_hat, 'I': I, 'sub': (left, mid, right), 'slope': s, 'lambda': lambda_bound,
    })


def make_T_pair(I_prime: ArcLike, I: ArcLike, slope: Fraction = Fraction(3, 4),
                ambient: Ambient = CIRCLE) -> IFSystem:
    """T+ and T-: affine contractions of I' toward its right and left endpoint.

    With 1/2 <= slope < 1 the two images cover I'.
    """
    I_prime, I = _check_support(I_prime, I, ambient)
    slope = to_rational(slope)
    if not Fraction(1, 2) <= slope < 1:
        raise InfeasibleSlopes(f"T pair slope {slope} outside [1/2, 1)")
    a, b = I_prime.lo, I_prime.hi
    reach = slope * (b - a)
    t_plus = _branch(I_prime, I, b - reach, b, ambient)
    t_minus = _branch(I_prime, I, a, a + reach, ambient)
    return IFSystem.of([('T+', t_plus), ('T-', t_minus)], meta={
        'I_prime': I_prime, 'I': I, 'slope': slope,
    })


def power_T_pair(pair: IFSystem, n: int = 4) -> IFSystem:
    """IFS((T+)^n, (T-)^n)."""
    if n < 1:
        raise InvalidGeometry("power must be >= 1")
    named = [(f"{name}^{n}", power(g, n)) for name, g in zip(pair.names, pair.generators)]
    meta = dict(pair.meta)
    meta['slope'] = pair.meta.get('slope', Fraction(1)) ** n
    meta['power'] = n
    return IFSystem.of(named, meta=meta)


def make_h(J_prime: ArcLike, J: ArcLike, I: ArcLike) -> PLMap:
    """Circle map fixing J' pointwise and squeezing the complement of J onto I."""
    J_prime, J, I = as_arc(J_prime), as_arc(J), as_arc(I)
    _require_strictly_inside(J_prime, J, "J' in J")
    for arc, what in ((J, "J"), (I, "I")):
        _require_in_ambient(arc, CIRCLE, what)
    touching_at_zero = (J.hi == 1 and I.lo == 0) or (I.hi == 1 and J.lo == 0)
    if not (I.hi < J.lo or J.hi < I.lo) or touching_at_zero:
        raise InvalidGeometry(f"J {J} meets I {I}")
    start = J.hi + ((I.lo - J.hi) % 1)
    points = [
        (J_prime.lo, J_prime.lo),
        (J_prime.hi, J_prime.hi),
        (J.hi, start),
        (J.lo + 1, start + (I.hi - I.lo)),
        (J_prime.lo + 1, J_prime.lo + 1),
    ]
    return pl_from_breakpoints(prune_collinear(points), CIRCLE)


def make_push_map(interval: ArcLike, sink: str = 'hi', ambient: Ambient = CIRCLE) -> PLMap:
    """Homeomorphism fixing the ends of an interval and pushing its interior toward one end.

    The core has slope 1/2: toward 'hi' the map is x -> (x + q) / 2 away from p.
    """
    arc = as_arc(interval)
    _require_in_ambient(arc, ambient, "push interval")
    if sink not in ('lo', 'hi'):
        raise InvalidGeometry(f"sink must be 'lo' or 'hi', got {sink!r}")
    p, q = arc.lo, arc.hi
    length = q - p
    if sink == 'hi':
        knee = (p + length / 32, p + 33 * length / 64)
    else:
        knee = (q - length / 32, p + 31 * length / 64)
    return embed_identity([(p, p), knee, (q, q)], ambient)
