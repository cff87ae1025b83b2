"""Orientation-preserving piecewise-linear homeomorphisms with rational breakpoints.

Interval maps send [lo, hi] onto their codomain (the ambient unless given).
Circle maps are stored as a lift over [x0, x0 + 1] with y(x0 + 1) = y(x0) + 1.
"""

import logging
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Optional, Sequence, Tuple

from .arcset import Ambient, Arc, ArcSet, CIRCLE, canonicalize, make_arc
from .errors import AmbientMismatch, NotAHomeomorphism, OutOfDomain
from .rationals import RationalLike, frac_part, to_rational

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PLMap:
    ambient: Ambient
    breakpoints: Tuple[Point, ...]
    codomain: Optional[Ambient] = None

    @property
    def target(self) -> Ambient:
        return self.codomain or self.ambient

    @property
    def xs(self) -> List[Fraction]:
        return [x for x, _ in self.breakpoints]

    @property
    def ys(self) -> List[Fraction]:
        return [y for _, y in self.breakpoints]

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __str__(self):
        pts = ', '.join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PLMap[{self.ambient}]({pts})"


def pl_from_breakpoints(pts: Sequence[Tuple[RationalLike, RationalLike]],
                        ambient: Ambient = CIRCLE,
                        codomain: Optional[Ambient] = None) -> PLMap:
    """Validated PLMap interpolating linearly between consecutive breakpoints."""
    points = [(to_rational(x), to_rational(y)) for x, y in pts]
    if len(points) < 2:
        raise NotAHomeomorphism("need at least two breakpoints")
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if not (x1 > x0 and y1 > y0):
            raise NotAHomeomorphism(f"breakpoints not strictly increasing at ({x0}, {y0}) -> ({x1}, {y1})")

    if ambient.is_circle:
        if codomain is not None and codomain != ambient:
            raise NotAHomeomorphism("circle maps have the circle as codomain")
        (x_first, y_first), (x_last, y_last) = points[0], points[-1]
        if x_last - x_first != 1 or y_last - y_first != 1:
            raise NotAHomeomorphism("circle lift must advance by exactly 1 in x and y")
        shift = floor(x_first)
        if shift:
            points = [(x - shift, y - shift) for x, y in points]
        return PLMap(ambient, tuple(points))

    target = codomain or ambient
    if (points[0][0], points[-1][0]) != (ambient.lo, ambient.hi):
        raise NotAHomeomorphism(f"breakpoints must span {ambient}")
    if (points[0][1], points[-1][1]) != (target.lo, target.hi):
        raise NotAHomeomorphism(f"breakpoints must map onto {target}")
    return PLMap(ambient, tuple(points), codomain if codomain != ambient else None)


def identity(ambient: Ambient = CIRCLE) -> PLMap:
    return PLMap(ambient, ((ambient.lo, ambient.lo), (ambient.hi, ambient.hi)))


def _interpolate(points: Sequence[Point], x: Fraction) -> Fraction:
    """Value of the polyline through ``points`` at x, for x within its span."""
    k = bisect_right(points, (x, Fraction(points[-1][1] + 1))) - 1
    k = min(max(k, 0), len(points) - 2)
    (x0, y0), (x1, y1) = points[k], points[k + 1]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def lift_value(m: PLMap, s: Fraction) -> Fraction:
    """Lift of a circle map evaluated at any real s (degree-one extension)."""
    x0 = m.breakpoints[0][0]
    n = floor(s - x0)
    return _interpolate(m.breakpoints, s - n) + n


def lift_inverse(m: PLMap, v: Fraction) -> Fraction:
    y0 = m.breakpoints[0][1]
    n = floor(v - y0)
    swapped = [(y, x) for x, y in m.breakpoints]
    return _interpolate(swapped, v - n) + n


def evaluate(m: PLMap, x: RationalLike) -> Fraction:
    """Exact image of x."""
    x = to_rational(x)
    if not m.ambient.contains(x):
        raise OutOfDomain(f"{x} outside {m.ambient}")
    if m.ambient.is_circle:
        return frac_part(lift_value(m, x))
    return _interpolate(m.breakpoints, x)


def prune_collinear(points: Sequence[Point]) -> List[Point]:
    """Drop interior breakpoints where incoming and outgoing slopes agree."""
    pruned: List[Point] = [points[0]]
    for k in range(1, len(points) - 1):
        (xa, ya), (xb, yb), (xc, yc) = pruned[-1], points[k], points[k + 1]
        if (yb - ya) * (xc - xb) != (yc - yb) * (xb - xa):
            pruned.append(points[k])
    pruned.append(points[-1])
    return pruned


def compose(outer: PLMap, inner: PLMap) -> PLMap:
    """outer after inner, with collinear breakpoints pruned."""
    if inner.target != outer.ambient:
        raise AmbientMismatch(f"cannot compose a map into {inner.target} with a map on {outer.ambient}")

    if inner.ambient.is_circle:
        x0 = inner.breakpoints[0][0]
        y0 = inner.breakpoints[0][1]
        xs = set(inner.xs)
        for u in outer.xs:
            v = y0 + frac_part(u - y0)
            xs.add(lift_inverse(inner, v))
        xs = sorted(x for x in xs if x0 <= x <= x0 + 1)
        points = [(x, lift_value(outer, lift_value(inner, x))) for x in xs]
        return PLMap(inner.ambient, tuple(prune_collinear(points)))

    xs = set(inner.xs)
    swapped = [(y, x) for x, y in inner.breakpoints]
    for u in outer.xs:
        xs.add(_interpolate(swapped, u))
    points = [(x, _interpolate(outer.breakpoints, _interpolate(inner.breakpoints, x))) for x in sorted(xs)]
    codomain = outer.target if outer.target != inner.ambient else None
    return PLMap(inner.ambient, tuple(prune_collinear(points)), codomain)


def power(m: PLMap, n: int) -> PLMap:
    result = identity(m.ambient)
    for _ in range(n):
        result = compose(m, result)
    return result


def invert(m: PLMap) -> PLMap:
    swapped = [(y, x) for x, y in m.breakpoints]
    if m.ambient.is_circle:
        shift = floor(swapped[0][0])
        return PLMap(m.ambient, tuple((x - shift, y - shift) for x, y in swapped))
    codomain = m.ambient if m.target != m.ambient else None
    return PLMap(m.target, tuple(swapped), codomain)


def _image_arc(m: PLMap, arc: Arc) -> Arc:
    target = m.target
    if not arc.wraps and (arc.lo, arc.hi) == (m.ambient.lo, m.ambient.hi):
        return Arc(target.lo, target.hi)
    if arc.is_point:
        y = evaluate(m, arc.lo)
        return Arc(y, y)
    return make_arc(evaluate(m, arc.lo), evaluate(m, arc.hi), target)


def image_arcset(m: PLMap, a: ArcSet) -> ArcSet:
    """Exact image of an arc set; arcs go to arcs through their endpoints."""
    if a.ambient != m.ambient:
        raise AmbientMismatch(f"set on {a.ambient}, map on {m.ambient}")
    return canonicalize([_image_arc(m, arc) for arc in a.arcs], m.target)


def preimage_arcset(m: PLMap, a: ArcSet) -> ArcSet:
    if a.ambient != m.target:
        raise AmbientMismatch(f"set on {a.ambient}, map into {m.target}")
    return image_arcset(invert(m), a)


def segment_slopes(m: PLMap) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """(x_lo, x_hi, slope) for each linear piece."""
    return [(x0, x1, (y1 - y0) / (x1 - x0))
            for (x0, y0), (x1, y1) in zip(m.breakpoints, m.breakpoints[1:])]


def max_slope_on(m: PLMap, arc: Arc) -> Fraction:
    """Largest slope of the pieces meeting the interior of a non-wrapping arc."""
    slopes = [s for lo, hi, s in segment_slopes(m) if lo < arc.hi and hi > arc.lo]
    if m.ambient.is_circle:
        slopes += [s for lo, hi, s in segment_slopes(m) if lo - 1 < arc.hi and hi - 1 > arc.lo]
    return max(slopes)


def has_fixed_point(m: PLMap) -> bool:
    """True when y = x somewhere (mod 1 on the circle)."""
    if not m.ambient.is_circle:
        offsets = [y - x for x, y in m.breakpoints]
        return min(offsets) <= 0 <= max(offsets)
    offsets = [y - x for x, y in m.breakpoints]
    lo, hi = min(offsets), max(offsets)
    return floor(hi) >= lo
