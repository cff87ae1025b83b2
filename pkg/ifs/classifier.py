"""Interior / Cantor / countable decomposition of iteration traces and the
classification of minimal sets into the admissible classes.

Finite traces only give evidence. Builders know the class they realize, so a
declared class is checked against the evidence rather than guessed.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from circle import (
    Arc,
    ArcSet,
    EvidenceContradictsMetadata,
    InsufficientDepth,
    canonicalize,
    directed_distance,
    format_rational,
    frac_part,
    membership,
)
from .engine import IterationTrace

logger = logging.getLogger(__name__)

DEFAULT_INTERIOR_FLOOR = Fraction(1, 10000)
DEFAULT_STABILITY_WINDOW = 3
DEFAULT_CONTRACTION = Fraction(1, 2)


class ClassName(str, Enum):
    FINITE = 'Finite'
    CANTOR = 'Cantor'
    WHOLE_SPACE = 'WholeSpace'
    INTERIOR_CANTOR_N = 'InteriorPlusCantorPlusN_boundaryMeetsN'
    INTERIOR_N = 'InteriorPlusN'
    CANTORVAL = 'InteriorPlusCantor_Cantorval'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Confidence:
    kind: str  # 'Proven' or 'Evidence'
    depth: Optional[int] = None

    def __str__(self):
        if self.kind == 'Proven':
            return 'Proven'
        return f"Evidence(depth={self.depth})"


@dataclass(frozen=True)
class ClassLabel:
    name: ClassName
    confidence: Confidence

    def to_dict(self) -> Dict:
        return {'label': self.name.value, 'confidence': str(self.confidence)}


@dataclass(frozen=True)
class CantorEvidence:
    """Per-level counts and maximal lengths of freshly created components."""

    component_count_growth: Tuple[int, ...]
    max_component_length: Tuple[Fraction, ...]
    holds: bool

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class Decomposition:
    interior: ArcSet
    cantor_evidence: CantorEvidence
    isolated: ArcSet
    unresolved: ArcSet
    final: ArcSet
    depth: int
    point_counts: Tuple[int, ...] = ()
    declared_isolated: ArcSet = None
    interior_floor: Fraction = DEFAULT_INTERIOR_FLOOR
    stability_window: int = DEFAULT_STABILITY_WINDOW

    @property
    def whole(self) -> bool:
        return self.final.is_full

    @property
    def n_points(self) -> List[Fraction]:
        """Isolated points found in the trace plus builder-declared ones."""
        points = [arc.lo for arc in self.isolated.arcs]
        if self.declared_isolated is not None:
            points += [arc.lo for arc in self.declared_isolated.arcs]
        return points

    def to_dict(self) -> Dict:
        return {
            'depth': self.depth,
            'interior_arcs': len(self.interior),
            'isolated_points': [format_rational(p) for p in self.n_points],
            'unresolved_arcs': len(self.unresolved),
            'cantor_evidence': {
                'holds': self.cantor_evidence.holds,
                'component_count_growth': list(self.cantor_evidence.component_count_growth),
                'max_component_length': [format_rational(v) for v in self.cantor_evidence.max_component_length],
            },
        }


@dataclass(frozen=True)
class Verdict:
    passed: bool
    case: Optional[str] = None
    reason: str = ''

    def __bool__(self):
        return self.passed


def _strictly_monotone(values: Sequence, increasing: bool) -> bool:
    pairs = zip(values, values[1:])
    if increasing:
        return all(b > a for a, b in pairs)
    return all(b < a for a, b in pairs)


def _neighbor_gaps(a: ArcSet) -> List[Tuple[Optional[Fraction], Optional[Fraction]]]:
    """Distance from each arc to the next component on its left and right.

    None means there is no other component on that side.
    """
    arcs = a.arcs
    n = len(arcs)
    gaps: List[Tuple[Optional[Fraction], Optional[Fraction]]] = []
    for i, arc in enumerate(arcs):
        if a.ambient.is_circle:
            if n == 1:
                gaps.append((None, None))
                continue
            left, right = arcs[i - 1], arcs[(i + 1) % n]
            gaps.append((frac_part(arc.lo - left.hi), frac_part(right.lo - arc.hi)))
        else:
            left = arc.lo - arcs[i - 1].hi if i > 0 else None
            right = arcs[i + 1].lo - arc.hi if i + 1 < n else None
            gaps.append((left, right))
    return gaps


def decompose(trace: IterationTrace,
              interior_floor: Fraction = DEFAULT_INTERIOR_FLOOR,
              stability_window: int = DEFAULT_STABILITY_WINDOW,
              declared_isolated: Sequence[Fraction] = ()) -> Decomposition:
    """Split the final level into interior, isolated and unresolved arcs.

    Args:
        trace: iteration trace with at least stability_window + 1 levels
        interior_floor: minimum length of an interior arc and the separation
            that makes a point isolated
        stability_window: number of trailing levels an interior arc must
            survive unchanged
        declared_isolated: N-witness points supplied by a builder

    Returns:
        Decomposition of trace.final
    """
    if trace.depth < stability_window:
        raise InsufficientDepth(f"trace depth {trace.depth} < stability window {stability_window}")
    interior_floor = Fraction(interior_floor)
    final = trace.final
    ambient = final.ambient
    declared = ArcSet.points(ambient, declared_isolated)

    # fresh components: arcs of level j that are not arcs of level j-1
    counts: List[int] = []
    max_lengths: List[Fraction] = []
    previous: set = set()
    for level in trace.levels:
        fresh = [arc for arc in level.arcs if arc not in previous]
        counts.append(len(fresh))
        max_lengths.append(max((arc.length for arc in fresh), default=Fraction(0)))
        previous = set(level.arcs)
    tail = slice(-(stability_window + 1), None)
    holds = all(c > 0 for c in counts[tail]) and \
        _strictly_monotone(counts[tail], increasing=True) and \
        _strictly_monotone(max_lengths[tail], increasing=False)
    evidence = CantorEvidence(tuple(counts), tuple(max_lengths), holds)

    point_counts = tuple(sum(1 for arc in level.arcs if arc.is_point) for level in trace.levels)

    if final.is_full:
        empty = ArcSet.empty(ambient)
        return Decomposition(final, evidence, empty, empty, final, trace.depth, point_counts,
                             declared, interior_floor, stability_window)

    recent = [set(level.arcs) for level in trace.levels[-(stability_window + 1):]]
    gaps = _neighbor_gaps(final)
    interior, isolated, unresolved = [], [], []
    for arc, (left, right) in zip(final.arcs, gaps):
        if arc.length >= interior_floor and all(arc in level for level in recent):
            interior.append(arc)
        elif arc.is_point and all(g is None or g > interior_floor for g in (left, right)):
            isolated.append(arc)
        else:
            unresolved.append(arc)
    logger.debug("decompose depth %d: %d interior, %d isolated, %d unresolved",
                 trace.depth, len(interior), len(isolated), len(unresolved))
    return Decomposition(
        interior=canonicalize(interior, ambient),
        cantor_evidence=evidence,
        isolated=canonicalize(isolated, ambient),
        unresolved=canonicalize(unresolved, ambient),
        final=final,
        depth=trace.depth,
        point_counts=point_counts,
        declared_isolated=declared,
        interior_floor=interior_floor,
        stability_window=stability_window,
    )


def _n_meets_boundary(d: Decomposition) -> bool:
    boundary = ArcSet.points(d.final.ambient, d.interior.endpoints())
    return any(membership(p, boundary) for p in d.n_points)


def assert_not_excluded(d: Decomposition) -> Verdict:
    """Check the evidence against the three impossible combinations."""
    has_interior = bool(d.interior)
    has_cantor = bool(d.cantor_evidence)
    has_n = bool(d.n_points)
    window = d.point_counts[-(d.stability_window + 1):]
    points_grow = len(window) > 1 and _strictly_monotone(window, increasing=True)

    if not has_interior and not has_cantor and points_grow:
        return Verdict(False, 'i', "no interior, no Cantor part, unbounded isolated points")
    if not has_interior and has_cantor and has_n:
        return Verdict(False, 'ii', "no interior with both a Cantor part and isolated points")
    if has_interior and has_cantor and has_n and not _n_meets_boundary(d):
        return Verdict(False, 'iii', "isolated points separated from every interior boundary")
    return Verdict(True)


def evidence_class(d: Decomposition) -> ClassName:
    if d.whole:
        return ClassName.WHOLE_SPACE
    verdict = assert_not_excluded(d)
    if not verdict:
        raise EvidenceContradictsMetadata(f"evidence matches excluded case ({verdict.case}): {verdict.reason}")
    has_cantor = bool(d.cantor_evidence)
    has_n = bool(d.n_points)
    if d.interior:
        if has_cantor and has_n:
            return ClassName.INTERIOR_CANTOR_N
        if has_cantor:
            return ClassName.CANTORVAL
        return ClassName.INTERIOR_N
    if has_cantor:
        return ClassName.CANTOR
    return ClassName.FINITE


def classify(d: Decomposition, declared_class: Optional[ClassName] = None) -> ClassLabel:
    """Label a decomposition; a declared class must agree with the evidence."""
    found = evidence_class(d)
    if declared_class is None:
        return ClassLabel(found, Confidence('Evidence', d.depth))
    declared_class = ClassName(declared_class)
    if declared_class != found:
        raise EvidenceContradictsMetadata(f"declared {declared_class}, evidence at depth {d.depth} says {found}")
    return ClassLabel(found, Confidence('Proven'))


def _fresh_spread(previous: ArcSet, level: ArcSet) -> Optional[Fraction]:
    """Farthest distance from an arc new at ``level`` to the arcs kept from ``previous``.

    Zero when nothing is new, None when nothing was kept.
    """
    kept_arcs = set(previous.arcs)
    kept = tuple(arc for arc in level.arcs if arc in kept_arcs)
    fresh = tuple(arc for arc in level.arcs if arc not in kept_arcs)
    if not fresh:
        return Fraction(0)
    if not kept:
        return None
    return directed_distance(ArcSet(fresh, level.ambient), ArcSet(kept, level.ambient))


def is_symmetric_cantorval(trace: IterationTrace, depth_checks: int = 2,
                           contraction: Fraction = DEFAULT_CONTRACTION,
                           interior_floor: Fraction = DEFAULT_INTERIOR_FLOOR,
                           stability_window: int = DEFAULT_STABILITY_WINDOW) -> bool:
    """Closure-of-interior check with accumulation at interior endpoints.

    Every final arc must be nondegenerate, and the arcs new at each of the
    last ``depth_checks`` levels must close in on the arcs kept from the level
    before, by at least the factor ``contraction`` per level. On both sides of
    every stable interior arc the nearest other component must approach at the
    same rate.
    """
    if depth_checks < 1 or depth_checks > stability_window:
        raise InsufficientDepth(f"depth_checks must lie in 1..{stability_window}")
    d = decompose(trace, interior_floor, stability_window)
    if not d.interior or d.whole:
        return False
    if any(arc.is_point for arc in d.final.arcs):
        return False

    first = max(1, trace.depth - depth_checks)
    spreads = [_fresh_spread(trace.levels[j - 1], trace.levels[j]) for j in range(first, trace.depth + 1)]
    if any(s is None for s in spreads):
        return False
    for before, after in zip(spreads, spreads[1:]):
        if after > contraction * before:
            logger.debug("new arcs stay %s from the kept ones (was %s)", after, before)
            return False

    levels = trace.levels[-(depth_checks + 1):]
    level_gaps = []
    for level in levels:
        index = {arc: i for i, arc in enumerate(level.arcs)}
        level_gaps.append((index, _neighbor_gaps(level)))

    for arc in d.interior.arcs:
        for side in (0, 1):
            distances = []
            for index, gaps in level_gaps:
                distance = gaps[index[arc]][side]
                if distance is None:
                    return False
                distances.append(distance)
            for before, after in zip(distances, distances[1:]):
                if after > contraction * before:
                    logger.debug("arc %s side %d: %s -> %s not contracting", arc, side, before, after)
                    return False
    return True
