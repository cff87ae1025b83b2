import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from circle import Arc, ArcSet, CIRCLE  # noqa: E402
from constructions import build_example, make_triadic_pair, make_three_branch  # noqa: E402

F = Fraction


def arcs(*pairs, ambient=CIRCLE) -> ArcSet:
    """Shorthand for a canonical circle arc set from (lo, hi) pairs."""
    return ArcSet.of(ambient, pairs)


@pytest.fixture(scope='session')
def triadic():
    return make_triadic_pair(Arc(F(1, 4), F(3, 4)), Arc(F(1, 8), F(7, 8)))


@pytest.fixture(scope='session')
def three_branch():
    return make_three_branch(Arc(F(1, 4), F(3, 4)), Arc(F(1, 8), F(7, 8)))


@pytest.fixture(scope='session')
def I_prime():
    return arcs((F(1, 4), F(3, 4)))


@pytest.fixture(scope='session')
def bundles():
    cache = {}

    def get(n, finite=False):
        if (n, finite) not in cache:
            cache[(n, finite)] = build_example(n, finite=finite)
        return cache[(n, finite)]
    return get
