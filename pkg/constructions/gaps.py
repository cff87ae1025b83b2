"""Gap data of self-similar Cantor sets and the gap-matching homeomorphism.

Two Cantor sets K1 ⊂ [a, b] and K2 ⊂ [c, d] whose gaps come in two families
are matched recursively: the longest primary gap of K1 goes to the longest
primary gap of K2, then the longest secondary gaps on each side are matched,
and so on, alternating families. Between matched gaps the map is linear.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from circle import (
    Ambient,
    Arc,
    ArcSet,
    DepthExceedsData,
    InvalidGeometry,
    PLMap,
    image_arcset,
    pl_from_breakpoints,
)
from ifs import IFSystem, word_map

logger = logging.getLogger(__name__)

PRIMARY = 'primary'
SECONDARY = 'secondary'


@dataclass(frozen=True)
class GapFamily:
    gaps: Tuple[Arc, ...]
    family_tag: str
    host: Arc

    def __post_init__(self):
        if self.family_tag not in (PRIMARY, SECONDARY):
            raise InvalidGeometry(f"unknown family tag {self.family_tag!r}")
        ordered = tuple(sorted(self.gaps, key=lambda g: (g.lo, g.hi)))
        object.__setattr__(self, 'gaps', ordered)
        for gap in ordered:
            if not self.host.lo <= gap.lo < gap.hi <= self.host.hi:
                raise InvalidGeometry(f"gap {gap} outside host {self.host}")
        for left, right in zip(ordered, ordered[1:]):
            if left.hi > right.lo:
                raise InvalidGeometry(f"gaps {left} and {right} overlap")

    def __len__(self):
        return len(self.gaps)

    def within(self, lo: Fraction, hi: Fraction) -> List[Arc]:
        return [g for g in self.gaps if lo <= g.lo and g.hi <= hi]


def families_disjoint(first: GapFamily, second: GapFamily) -> bool:
    """True when no gap of one family meets a gap of the other."""
    for a in first.gaps:
        for b in second.gaps:
            if a.lo < b.hi and b.lo < a.hi:
                return False
    return True


def _image(m: PLMap, arc: Arc) -> Arc:
    return image_arcset(m, ArcSet((arc,), m.ambient)).arcs[0]


def gaps_to_depth(ifs: IFSystem, host: Arc, primary_gap: Arc, secondary_gap: Arc,
                  depth: int, chart: Sequence[str] = ()) -> Tuple[GapFamily, GapFamily]:
    """Gap families φ(primary_gap) and φ(secondary_gap) for all words |φ| <= depth.

    ``chart`` is a word (generator names, leftmost applied last) placing the
    whole picture inside chart(host), e.g. ('f', 'f') for K ∩ ff(I').
    """
    index = {name: i for i, name in enumerate(ifs.names)}
    chart_word = tuple(index[name] for name in chart)
    chart_host = _image(word_map(ifs, chart_word), host)
    primary, secondary = [], []
    for length in range(depth + 1):
        for word in itertools.product(range(len(ifs)), repeat=length):
            m = word_map(ifs, chart_word + word)
            primary.append(_image(m, primary_gap))
            secondary.append(_image(m, secondary_gap))
    logger.debug("%d gaps per family to depth %d in %s", len(primary), depth, chart_host)
    return GapFamily(tuple(primary), PRIMARY, chart_host), GapFamily(tuple(secondary), SECONDARY, chart_host)


@dataclass
class GapMatching:
    domain_host: Arc
    codomain_host: Arc
    pairs: List[Tuple[Arc, Arc, str, int]] = field(default_factory=list)

    def sorted_pairs(self) -> List[Tuple[Arc, Arc, str, int]]:
        return sorted(self.pairs, key=lambda p: p[0].lo)

    def breakpoints(self) -> List[Tuple[Fraction, Fraction]]:
        points = [(self.domain_host.lo, self.codomain_host.lo)]
        for dom, cod, _, _ in self.sorted_pairs():
            points += [(dom.lo, cod.lo), (dom.hi, cod.hi)]
        points.append((self.domain_host.hi, self.codomain_host.hi))
        # matched gaps may touch the host ends
        deduped = []
        for p in points:
            if not deduped or deduped[-1] != p:
                deduped.append(p)
        return deduped

    def modulus(self) -> Fraction:
        """Largest codomain length still left to linear interpolation."""
        ys = [y for _, y in self.breakpoints()]
        matched = {(cod.lo, cod.hi) for _, cod, _, _ in self.pairs}
        spans = [hi - lo for lo, hi in zip(ys, ys[1:]) if (lo, hi) not in matched]
        return max(spans, default=Fraction(0))

    @property
    def levels(self) -> int:
        return 1 + max((p[3] for p in self.pairs), default=-1)


def _longest(gaps: List[Arc]) -> Arc:
    """Longest gap, leftmost on ties."""
    best = gaps[0]
    for gap in gaps[1:]:
        if gap.length > best.length:
            best = gap
    return best


def match_gaps(domain: Tuple[GapFamily, GapFamily], codomain: Tuple[GapFamily, GapFamily],
               depth: Optional[int] = None) -> GapMatching:
    """Recursive longest-gap matching, level 0 primary, then alternating.

    With depth None the recursion runs until the gap data is exhausted.
    """
    dom_primary, dom_secondary = domain
    cod_primary, cod_secondary = codomain
    matching = GapMatching(dom_primary.host, cod_primary.host)
    regions = [(dom_primary.host.lo, dom_primary.host.hi, cod_primary.host.lo, cod_primary.host.hi)]
    level = 0
    while regions and (depth is None or level <= depth):
        if level % 2 == 0:
            order = ((dom_primary, cod_primary), (dom_secondary, cod_secondary))
        else:
            order = ((dom_secondary, cod_secondary), (dom_primary, cod_primary))
        next_regions = []
        matched = 0
        for d_lo, d_hi, c_lo, c_hi in regions:
            if (d_lo < d_hi) != (c_lo < c_hi):
                raise DepthExceedsData(f"region [{d_lo}, {d_hi}] vs [{c_lo}, {c_hi}] degenerates on one side")
            for dom_family, cod_family in order:
                dom_gaps = dom_family.within(d_lo, d_hi)
                cod_gaps = cod_family.within(c_lo, c_hi)
                if not dom_gaps and not cod_gaps:
                    continue
                if not dom_gaps or not cod_gaps:
                    raise DepthExceedsData(
                        f"{dom_family.family_tag} gaps missing on one side at level {level} "
                        f"in [{d_lo}, {d_hi}] vs [{c_lo}, {c_hi}]")
                dom_gap, cod_gap = _longest(dom_gaps), _longest(cod_gaps)
                matching.pairs.append((dom_gap, cod_gap, dom_family.family_tag, level))
                matched += 1
                next_regions.append((d_lo, dom_gap.lo, c_lo, cod_gap.lo))
                next_regions.append((dom_gap.hi, d_hi, cod_gap.hi, c_hi))
                break
        if matched == 0:
            if depth is not None:
                raise DepthExceedsData(f"no gap matched at level {level} <= {depth}")
            break
        logger.debug("level %d: %d gap pairs", level, matched)
        regions = next_regions
        level += 1
    return matching


def lemma4_homeomorphism(g1: Tuple[GapFamily, GapFamily], g2: Tuple[GapFamily, GapFamily],
                         depth: Optional[int] = None) -> PLMap:
    """PL map between the hosts sending matched gaps onto matched gaps."""
    matching = match_gaps(g1, g2, depth)
    domain = Ambient.interval(matching.domain_host.lo, matching.domain_host.hi)
    codomain = Ambient.interval(matching.codomain_host.lo, matching.codomain_host.hi)
    return pl_from_breakpoints(matching.breakpoints(), domain, codomain)
