"""JSON-ready dictionaries for arc sets and PL maps.

Rationals are always written as "p/q" strings in lowest terms (0 is "0/1").
ArcSet: {"ambient": "circle"|"interval", "lo", "hi", "arcs": [{"lo", "hi", "wraps"}]}
PLMap:  {"ambient", "lo", "hi", "breakpoints": [["x", "y"], ...]} plus an
optional "codomain": {"lo", "hi"} for interval maps between different intervals.
"""

from typing import Any, Dict

from .arcset import Ambient, Arc, ArcSet, CIRCLE, canonicalize
from .errors import InvalidArc
from .plmap import PLMap, pl_from_breakpoints
from .rationals import format_rational, to_rational


def _ambient_fields(ambient: Ambient) -> Dict[str, Any]:
    return {
        'ambient': ambient.kind,
        'lo': format_rational(ambient.lo),
        'hi': format_rational(ambient.hi),
    }


def ambient_from_dict(data: Dict[str, Any]) -> Ambient:
    kind = data.get('ambient', 'circle')
    if kind == 'circle':
        return CIRCLE
    if kind == 'interval':
        return Ambient.interval(to_rational(data['lo']), to_rational(data['hi']))
    raise InvalidArc(f"unknown ambient {kind!r}")


def arcset_to_dict(a: ArcSet) -> Dict[str, Any]:
    data = _ambient_fields(a.ambient)
    data['arcs'] = [
        {'lo': format_rational(arc.lo), 'hi': format_rational(arc.hi), 'wraps': arc.wraps}
        for arc in a.arcs
    ]
    return data


def arcset_from_dict(data: Dict[str, Any]) -> ArcSet:
    ambient = ambient_from_dict(data)
    try:
        arcs = [Arc(to_rational(item['lo']), to_rational(item['hi']), bool(item.get('wraps', False)))
                for item in data['arcs']]
    except (TypeError, ValueError, KeyError) as e:
        raise InvalidArc(f"malformed arc list: {e}") from e
    return canonicalize(arcs, ambient)


def plmap_to_dict(m: PLMap) -> Dict[str, Any]:
    data = _ambient_fields(m.ambient)
    data['breakpoints'] = [[format_rational(x), format_rational(y)] for x, y in m.breakpoints]
    if m.codomain is not None:
        data['codomain'] = {'lo': format_rational(m.codomain.lo), 'hi': format_rational(m.codomain.hi)}
    return data


def plmap_from_dict(data: Dict[str, Any]) -> PLMap:
    ambient = ambient_from_dict(data)
    codomain = None
    if 'codomain' in data:
        codomain = Ambient.interval(to_rational(data['codomain']['lo']), to_rational(data['codomain']['hi']))
    return pl_from_breakpoints(data['breakpoints'], ambient, codomain)
