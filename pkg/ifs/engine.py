"""Set dynamics of an iterated function system of PL homeomorphisms.

Levels follow Λ_{k+1} = f_1(Λ_k) ∪ ... ∪ f_n(Λ_k). Word orbits are enumerated
breadth first with exact dedup, so every point keeps its shortest witness word.

Settings (environment or .env at the repo root):
- IFS_ARC_CAP: maximum number of arcs in one level (default 1000000)
- IFS_ORBIT_CAP: maximum number of distinct orbit points (default 1000000)
"""

import itertools
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv
from tqdm import tqdm

from circle import (
    Ambient,
    Arc,
    ArcSet,
    AmbientMismatch,
    IFSError,
    OutOfDomain,
    Overflow,
    PLMap,
    canonicalize,
    component_stats,
    compose,
    directed_distance,
    frac_part,
    identity,
    image_arcset,
    intersect,
    is_subset,
    preimage_arcset,
    to_rational,
    union_all,
)
from circle.rationals import RationalLike

load_dotenv(Path(__file__).parent.parent / '.env')

logger = logging.getLogger(__name__)

DEFAULT_ARC_CAP = 1_000_000
DEFAULT_ORBIT_CAP = 1_000_000

Word = Tuple[int, ...]


def arc_cap() -> int:
    return int(os.environ.get('IFS_ARC_CAP', DEFAULT_ARC_CAP))


def orbit_cap() -> int:
    return int(os.environ.get('IFS_ORBIT_CAP', DEFAULT_ORBIT_CAP))


@dataclass(frozen=True)
class IFSystem:
    """Named generators sharing one ambient."""

    generators: Tuple[PLMap, ...]
    names: Tuple[str, ...]
    ambient: Ambient
    meta: Dict[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.generators:
            raise IFSError("an IFS needs at least one generator")
        if len(self.names) != len(self.generators):
            raise IFSError("one name per generator")
        for name, g in zip(self.names, self.generators):
            if g.ambient != self.ambient or g.target != self.ambient:
                raise AmbientMismatch(f"generator {name} acts on {g.ambient}, system on {self.ambient}")

    @classmethod
    def of(cls, named: Sequence[Tuple[str, PLMap]], meta: Optional[Dict[str, object]] = None) -> 'IFSystem':
        names = tuple(name for name, _ in named)
        gens = tuple(g for _, g in named)
        ambient = gens[0].ambient if gens else None
        return cls(gens, names, ambient, dict(meta or {}))

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, name: str) -> PLMap:
        return self.generators[self.names.index(name)]

    def word_name(self, word: Word) -> str:
        """Generator symbols of a word, leftmost applied last."""
        if not word:
            return 'id'
        return ''.join(self.names[i] for i in word)


def word_map(ifs: IFSystem, word: Word) -> PLMap:
    """Composite PL map of a word (indices applied right to left)."""
    result = identity(ifs.ambient)
    for i in reversed(word):
        result = compose(ifs.generators[i], result)
    return result


def apply_word(ifs: IFSystem, word: Word, x: RationalLike) -> Fraction:
    y = to_rational(x)
    for i in reversed(word):
        y = ifs.generators[i](y)
    return y


@dataclass
class IterationTrace:
    seed: ArcSet
    levels: List[ArcSet] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def final(self) -> ArcSet:
        return self.levels[-1]

    @property
    def stats(self) -> List[Tuple[int, Fraction, Fraction, Fraction]]:
        return [component_stats(level) for level in self.levels]


def step(ifs: IFSystem, a: ArcSet) -> ArcSet:
    """Canonical union of the images of A under every generator."""
    if a.ambient != ifs.ambient:
        raise AmbientMismatch(f"set on {a.ambient}, system on {ifs.ambient}")
    return union_all([image_arcset(g, a) for g in ifs.generators], ifs.ambient)


def iterate(ifs: IFSystem, seed: ArcSet, k: int, progress: bool = False) -> IterationTrace:
    """Levels Λ_0 = seed through Λ_k.

    Raises Overflow, carrying the levels computed so far, when a level
    exceeds IFS_ARC_CAP arcs.
    """
    if k < 0:
        raise IFSError(f"depth must be >= 0, got {k}")
    if seed.ambient != ifs.ambient:
        raise AmbientMismatch(f"seed on {seed.ambient}, system on {ifs.ambient}")
    cap = arc_cap()
    trace = IterationTrace(seed, [seed])
    for level in tqdm(range(1, k + 1), desc="Iterating", disable=not progress):
        nxt = step(ifs, trace.final)
        if len(nxt) > cap:
            logger.warning("level %d has %d arcs (cap %d)", level, len(nxt), cap)
            raise Overflow(f"level {level} has {len(nxt)} arcs, cap is {cap}", partial=trace)
        trace.levels.append(nxt)
        logger.debug("level %d: %d arcs", level, len(nxt))
    return trace


def _start_point(ifs: IFSystem, x: RationalLike) -> Fraction:
    x = to_rational(x)
    if not ifs.ambient.contains(x):
        raise OutOfDomain(f"{x} outside {ifs.ambient}")
    return frac_part(x) if ifs.ambient.is_circle else x


def _orbit_levels(ifs: IFSystem, x: Fraction, max_len: int):
    """Yield (length, witnesses) after each breadth-first layer.

    ``witnesses`` maps every point reached so far to its shortest word. Points
    are deduplicated by exact value through the dict keys; ``ArcSet.points``
    sorts them when a caller needs them in order.
    """
    cap = orbit_cap()
    witnesses: Dict[Fraction, Word] = {x: ()}
    frontier = [x]
    yield 0, witnesses
    for length in range(1, max_len + 1):
        fresh = []
        for p in frontier:
            word = witnesses[p]
            for i, g in enumerate(ifs.generators):
                y = g(p)
                if y not in witnesses:
                    witnesses[y] = (i,) + word
                    fresh.append(y)
        if len(witnesses) > cap:
            raise Overflow(f"orbit has {len(witnesses)} points after words of length {length}, cap is {cap}",
                           partial=ArcSet.points(ifs.ambient, witnesses))
        logger.debug("orbit length %d: %d new points", length, len(fresh))
        yield length, witnesses
        if not fresh:
            return
        frontier = fresh


def orbit_witnesses(ifs: IFSystem, x: RationalLike, max_len: int) -> Dict[Fraction, Word]:
    """Every orbit point of words of length <= max_len with its shortest word."""
    witnesses: Dict[Fraction, Word] = {}
    for _, witnesses in _orbit_levels(ifs, _start_point(ifs, x), max_len):
        pass
    return witnesses


def orbit_closure(ifs: IFSystem, x: RationalLike, max_len: int) -> ArcSet:
    """Point-arcs {φ(x) : |φ| <= max_len}."""
    return ArcSet.points(ifs.ambient, orbit_witnesses(ifs, x, max_len))


def check_forward_invariance(ifs: IFSystem, a: ArcSet) -> bool:
    return all(is_subset(image_arcset(g, a), a) for g in ifs.generators)


def check_backward_property(ifs: IFSystem, a: ArcSet, window: Arc,
                            within: Optional[ArcSet] = None) -> bool:
    """True iff f^{-1}(A) ∩ window ⊆ within (default A) for every generator."""
    window_set = canonicalize([window], a.ambient)
    within = a if within is None else within
    return all(is_subset(intersect(preimage_arcset(g, a), window_set), within)
               for g in ifs.generators)


def density_level(ifs: IFSystem, x: RationalLike, target: ArcSet, eps: RationalLike,
                  max_len: int) -> Optional[int]:
    """Shortest word length at which the orbit is eps-dense in target, else None."""
    eps = to_rational(eps)
    if eps <= 0:
        raise IFSError("eps must be positive")
    if not target:
        return 0
    for length, witnesses in _orbit_levels(ifs, _start_point(ifs, x), max_len):
        gap = directed_distance(target, ArcSet.points(ifs.ambient, witnesses))
        logger.debug("density at length %d: %s (eps %s)", length, gap, eps)
        if gap <= eps:
            return length
    return None


def check_density(ifs: IFSystem, x: RationalLike, target: ArcSet, eps: RationalLike,
                  max_len: int) -> bool:
    return density_level(ifs, x, target, eps, max_len) is not None


def brute_force_level(ifs: IFSystem, seed: ArcSet, k: int) -> ArcSet:
    """Union of φ(seed) over every word of length exactly k (no shared work)."""
    images = []
    for word in itertools.product(range(len(ifs)), repeat=k):
        images.append(image_arcset(word_map(ifs, word), seed))
    return union_all(images, ifs.ambient)
