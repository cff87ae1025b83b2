from .generators import (
    as_arc,
    embed_identity,
    make_triadic_pair,
    make_three_branch,
    make_contracting_triple_pair,
    make_T_pair,
    power_T_pair,
    make_h,
    make_push_map,
)
from .gaps import (
    PRIMARY,
    SECONDARY,
    GapFamily,
    GapMatching,
    families_disjoint,
    gaps_to_depth,
    match_gaps,
    lemma4_homeomorphism,
)
from .examples import (
    DEFAULT_DEPTHS,
    ExampleBundle,
    Example7Params,
    Witnesses,
    build_example,
    example7_psi,
    make_example7_T,
)
from .matrix import MATRIX_CASES, classify_bundle, run_matrix

__all__ = [
    'as_arc',
    'embed_identity',
    'make_triadic_pair',
    'make_three_branch',
    'make_contracting_triple_pair',
    'make_T_pair',
    'power_T_pair',
    'make_h',
    'make_push_map',
    'PRIMARY',
    'SECONDARY',
    'GapFamily',
    'GapMatching',
    'families_disjoint',
    'gaps_to_depth',
    'match_gaps',
    'lemma4_homeomorphism',
    'DEFAULT_DEPTHS',
    'ExampleBundle',
    'Example7Params',
    'Witnesses',
    'build_example',
    'example7_psi',
    'make_example7_T',
    'MATRIX_CASES',
    'classify_bundle',
    'run_matrix',
]
