"""Canonical unions of closed arcs on the circle [0,1) (0 = 1) or on an interval.

An ArcSet is always canonical: arcs are pairwise disjoint (not even touching),
sorted by ``lo``, and a wrapped arc, if present, is unique and stored last.
Point-arcs (lo == hi) are ordinary members.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import AmbientMismatch, EmptySet, InvalidArc
from .rationals import RationalLike, circle_distance, frac_part, to_rational

ZERO = Fraction(0)
ONE = Fraction(1)
INF = float("inf")


@dataclass(frozen=True)
class Ambient:
    """The space arcs live in: the unit circle or a closed interval."""

    kind: str
    lo: Fraction = ZERO
    hi: Fraction = ONE

    def __post_init__(self):
        if self.kind not in ('circle', 'interval'):
            raise ValueError(f"unknown ambient kind {self.kind!r}")
        object.__setattr__(self, 'lo', to_rational(self.lo))
        object.__setattr__(self, 'hi', to_rational(self.hi))
        if self.kind == 'circle' and (self.lo, self.hi) != (ZERO, ONE):
            raise ValueError("the circle ambient is always [0, 1)")
        if self.lo >= self.hi:
            raise ValueError("empty ambient interval")

    @classmethod
    def interval(cls, lo: RationalLike = 0, hi: RationalLike = 1) -> 'Ambient':
        return cls('interval', to_rational(lo), to_rational(hi))

    @property
    def is_circle(self) -> bool:
        return self.kind == 'circle'

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def distance(self, x: Fraction, y: Fraction) -> Fraction:
        if self.is_circle:
            return circle_distance(x, y)
        return abs(x - y)

    def __str__(self):
        if self.is_circle:
            return 'circle'
        return f"interval[{self.lo}, {self.hi}]"


CIRCLE = Ambient('circle')


@dataclass(frozen=True)
class Arc:
    """Closed arc from ``lo`` counter-clockwise to ``hi``.

    ``open_endpoints`` is metadata set by ``complement`` (the arc is the
    closure of an open gap) and does not take part in equality.
    """

    lo: Fraction
    hi: Fraction
    wraps: bool = False
    open_endpoints: Tuple[bool, bool] = field(default=(False, False), compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'lo', to_rational(self.lo))
        object.__setattr__(self, 'hi', to_rational(self.hi))

    @property
    def length(self) -> Fraction:
        if self.wraps:
            return 1 - self.lo + self.hi
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return not self.wraps and self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        if self.wraps:
            return frac_part(self.lo + self.length / 2)
        return (self.lo + self.hi) / 2

    def pieces(self) -> List[Tuple[Fraction, Fraction]]:
        """Linear pieces on [0, 1] (a wrapped arc splits at 0)."""
        if self.wraps:
            return [(self.lo, ONE), (ZERO, self.hi)]
        return [(self.lo, self.hi)]

    def __str__(self):
        suffix = ' wraps' if self.wraps else ''
        return f"[{self.lo}, {self.hi}{suffix}]"


def make_arc(lo: RationalLike, hi: RationalLike, ambient: Ambient = CIRCLE) -> Arc:
    """Arc from lo to hi; on the circle lo > hi means the arc crosses 0."""
    lo, hi = to_rational(lo), to_rational(hi)
    return Arc(lo, hi, wraps=ambient.is_circle and lo > hi)


@dataclass(frozen=True)
class ArcSet:
    arcs: Tuple[Arc, ...]
    ambient: Ambient

    @classmethod
    def empty(cls, ambient: Ambient = CIRCLE) -> 'ArcSet':
        return cls((), ambient)

    @classmethod
    def full(cls, ambient: Ambient = CIRCLE) -> 'ArcSet':
        return cls((Arc(ambient.lo, ambient.hi),), ambient)

    @classmethod
    def of(cls, ambient: Ambient, pairs: Iterable[Tuple[RationalLike, RationalLike]]) -> 'ArcSet':
        """Canonical set from (lo, hi) pairs; crossing 0 is inferred on the circle."""
        return canonicalize([make_arc(lo, hi, ambient) for lo, hi in pairs], ambient)

    @classmethod
    def points(cls, ambient: Ambient, values: Iterable[RationalLike]) -> 'ArcSet':
        return canonicalize([Arc(v, v) for v in values], ambient)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __bool__(self) -> bool:
        return bool(self.arcs)

    @property
    def is_full(self) -> bool:
        return len(self.arcs) == 1 and not self.arcs[0].wraps and \
            (self.arcs[0].lo, self.arcs[0].hi) == (self.ambient.lo, self.ambient.hi)

    @property
    def total_length(self) -> Fraction:
        return sum((a.length for a in self.arcs), ZERO)

    def endpoints(self) -> List[Fraction]:
        values = []
        for arc in self.arcs:
            values.extend([arc.lo, arc.hi])
        return values

    def __str__(self):
        return '{' + ', '.join(str(a) for a in self.arcs) + '}'


def _check_same_ambient(a: ArcSet, b: ArcSet):
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} vs {b.ambient}")


def _validate(arc: Arc, ambient: Ambient) -> Optional[Arc]:
    """Range-check one arc; returns it normalized (points at 1 move to 0)."""
    if ambient.is_circle:
        if not (ZERO <= arc.lo <= ONE and ZERO <= arc.hi <= ONE):
            raise InvalidArc(f"arc {arc} leaves [0, 1]")
        if arc.wraps:
            if arc.hi >= arc.lo:
                return Arc(ZERO, ONE)
            if arc.lo == ONE:
                return Arc(ZERO, arc.hi)
            return arc
        if arc.lo > arc.hi:
            raise InvalidArc(f"arc {arc} has lo > hi without wrapping")
        if arc.lo == arc.hi == ONE:
            return Arc(ZERO, ZERO)
        return arc
    if arc.wraps:
        raise InvalidArc(f"wrapped arc {arc} on {ambient}")
    if arc.lo > arc.hi:
        raise InvalidArc(f"arc {arc} has lo > hi")
    if not (ambient.contains(arc.lo) and ambient.contains(arc.hi)):
        raise InvalidArc(f"arc {arc} leaves {ambient}")
    return arc


def _merge(pieces: List[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
    pieces = sorted(pieces)
    merged: List[List[Fraction]] = []
    for lo, hi in pieces:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def _from_pieces(pieces: List[Tuple[Fraction, Fraction]], ambient: Ambient) -> ArcSet:
    """Canonical ArcSet from merged, sorted linear pieces."""
    if not ambient.is_circle or not pieces:
        return ArcSet(tuple(Arc(lo, hi) for lo, hi in pieces), ambient)

    # a point at 1 is the point 0
    if pieces[-1] == (ONE, ONE):
        pieces = _merge(pieces[:-1] + [(ZERO, ZERO)])
    if pieces == [(ZERO, ONE)]:
        return ArcSet.full(ambient)
    if len(pieces) > 1 and pieces[0][0] == ZERO and pieces[-1][1] == ONE:
        first, last = pieces[0], pieces[-1]
        middle = [Arc(lo, hi) for lo, hi in pieces[1:-1]]
        if first[1] == ZERO:
            return ArcSet(tuple(middle + [Arc(last[0], ONE)]), ambient)
        return ArcSet(tuple(middle + [Arc(last[0], first[1], wraps=True)]), ambient)
    return ArcSet(tuple(Arc(lo, hi) for lo, hi in pieces), ambient)


def canonicalize(arcs: Iterable[Arc], ambient: Ambient = CIRCLE) -> ArcSet:
    """Merge, sort and deduplicate arcs into canonical form."""
    pieces: List[Tuple[Fraction, Fraction]] = []
    for arc in arcs:
        arc = _validate(arc, ambient)
        pieces.extend(arc.pieces())
    return _from_pieces(_merge(pieces), ambient)


def _closed_pieces(a: ArcSet) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint sorted linear pieces where 0 and 1 are both present if either is."""
    pieces = []
    for arc in a.arcs:
        pieces.extend(arc.pieces())
    if a.ambient.is_circle:
        extra = []
        for lo, hi in pieces:
            if hi == ONE:
                extra.append((ZERO, ZERO))
            if lo == ZERO:
                extra.append((ONE, ONE))
        pieces.extend(extra)
    return _merge(pieces)


def _in_pieces(x: Fraction, pieces: List[Tuple[Fraction, Fraction]]) -> bool:
    k = bisect_right(pieces, (x, INF)) - 1
    return k >= 0 and pieces[k][0] <= x <= pieces[k][1]


def membership(x: RationalLike, a: ArcSet) -> bool:
    """Exact membership oracle."""
    x = to_rational(x)
    if a.ambient.is_circle:
        x = frac_part(x)
    elif not a.ambient.contains(x):
        return False
    return _in_pieces(x, _closed_pieces(a))


def union(a: ArcSet, b: ArcSet) -> ArcSet:
    _check_same_ambient(a, b)
    return canonicalize(a.arcs + b.arcs, a.ambient)


def union_all(sets: Sequence[ArcSet], ambient: Ambient) -> ArcSet:
    """Union of many sets in one merge pass."""
    arcs: List[Arc] = []
    for s in sets:
        if s.ambient != ambient:
            raise AmbientMismatch(f"{s.ambient} vs {ambient}")
        arcs.extend(s.arcs)
    return canonicalize(arcs, ambient)


def intersect(a: ArcSet, b: ArcSet) -> ArcSet:
    _check_same_ambient(a, b)
    left, right = _closed_pieces(a), _closed_pieces(b)
    out = []
    i = j = 0
    while i < len(left) and j < len(right):
        lo = max(left[i][0], right[j][0])
        hi = min(left[i][1], right[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if left[i][1] < right[j][1]:
            i += 1
        else:
            j += 1
    return _from_pieces(_merge(out), a.ambient)


def is_subset(a: ArcSet, b: ArcSet) -> bool:
    _check_same_ambient(a, b)
    return union(a, b) == b


def _with_flags(gaps: ArcSet, removed: ArcSet) -> ArcSet:
    pieces = _closed_pieces(removed)
    flagged = []
    for arc in gaps.arcs:
        if gaps.is_full and gaps.ambient.is_circle:
            flags = (True, True)
        else:
            flags = (_in_pieces(arc.lo, pieces), _in_pieces(arc.hi, pieces))
        flagged.append(Arc(arc.lo, arc.hi, arc.wraps, open_endpoints=flags))
    return ArcSet(tuple(flagged), gaps.ambient)


def complement(a: ArcSet) -> ArcSet:
    """Closure of ambient minus A; endpoints belonging to A are flagged open."""
    ambient = a.ambient
    if not a.arcs:
        return ArcSet.full(ambient)
    if a.is_full:
        return ArcSet.empty(ambient)

    pieces = []
    for arc in a.arcs:
        pieces.extend(arc.pieces())
    pieces = _merge(pieces)
    gaps: List[Arc] = []
    for (_, hi), (lo, _) in zip(pieces, pieces[1:]):
        if hi < lo:
            gaps.append(Arc(hi, lo))
    if ambient.is_circle:
        start, end = pieces[-1][1], pieces[0][0]
        if start == ONE:
            start = ZERO
        if start < end:
            gaps.append(Arc(start, end))
        elif start > end:
            gaps.append(Arc(start, ONE) if end == ZERO else Arc(start, end, wraps=True))
        elif len(pieces) == 1 and pieces[0][0] == pieces[0][1]:
            gaps.append(Arc(ZERO, ONE))
    else:
        if pieces[0][0] > ambient.lo:
            gaps.append(Arc(ambient.lo, pieces[0][0]))
        if pieces[-1][1] < ambient.hi:
            gaps.append(Arc(pieces[-1][1], ambient.hi))
    return _with_flags(canonicalize(gaps, ambient), a)


class _Locator:
    """Answers membership and distance queries against one fixed arc set."""

    def __init__(self, a: ArcSet):
        if not a.arcs:
            raise EmptySet("distance to the empty set")
        self.ambient = a.ambient
        self.pieces = _closed_pieces(a)
        self.ends = sorted(set(a.endpoints()))

    def distance(self, x: Fraction) -> Fraction:
        if self.ambient.is_circle:
            x = frac_part(x)
        if _in_pieces(x, self.pieces):
            return ZERO
        ends = self.ends
        k = bisect_left(ends, x)
        candidates = {ends[k - 1], ends[k % len(ends)], ends[0], ends[-1]}
        return min(self.ambient.distance(x, e) for e in candidates)


def point_distance(x: RationalLike, a: ArcSet) -> Fraction:
    """Distance from a point to a nonempty arc set."""
    return _Locator(a).distance(to_rational(x))


def _gap_midpoints(b: ArcSet) -> List[Fraction]:
    """Midpoints of the open gaps between neighbouring pieces of B.

    Point arcs keep their own gaps here, unlike ``complement`` whose closure
    joins the gaps on either side of a point.
    """
    pieces = _closed_pieces(b)
    mids = [(hi + lo) / 2 for (_, hi), (lo, _) in zip(pieces, pieces[1:]) if hi < lo]
    if b.ambient.is_circle and pieces[0][0] > ZERO:
        mids.append(frac_part((pieces[-1][1] + pieces[0][0] + 1) / 2))
    return mids


def directed_distance(a: ArcSet, b: ArcSet) -> Fraction:
    """sup over x in A of d(x, B)."""
    _check_same_ambient(a, b)
    if not a.arcs or not b.arcs:
        raise EmptySet("Hausdorff distance needs nonempty sets")
    if b.is_full:
        return ZERO
    a_pieces = _closed_pieces(a)
    candidates = set(a.endpoints())
    candidates.update(x for x in _gap_midpoints(b) if _in_pieces(x, a_pieces))
    locator = _Locator(b)
    return max(locator.distance(x) for x in candidates)


def hausdorff_distance(a: ArcSet, b: ArcSet) -> Fraction:
    return max(directed_distance(a, b), directed_distance(b, a))


def component_stats(a: ArcSet) -> Tuple[int, Fraction, Fraction, Fraction]:
    """(count, min_len, max_len, total_len) over the arcs of A."""
    if not a.arcs:
        return 0, ZERO, ZERO, ZERO
    lengths = [arc.length for arc in a.arcs]
    return len(lengths), min(lengths), max(lengths), sum(lengths, ZERO)
