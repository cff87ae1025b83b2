from .engine import (
    IFSystem,
    IterationTrace,
    Word,
    arc_cap,
    orbit_cap,
    word_map,
    apply_word,
    step,
    iterate,
    orbit_closure,
    orbit_witnesses,
    check_forward_invariance,
    check_backward_property,
    check_density,
    density_level,
    brute_force_level,
)
from .classifier import (
    ClassName,
    ClassLabel,
    Confidence,
    CantorEvidence,
    Decomposition,
    Verdict,
    decompose,
    classify,
    evidence_class,
    assert_not_excluded,
    is_symmetric_cantorval,
)
from .export import CSV_HEADER, trace_to_dict, trace_to_json, trace_to_csv

__all__ = [
    'IFSystem',
    'IterationTrace',
    'Word',
    'arc_cap',
    'orbit_cap',
    'word_map',
    'apply_word',
    'step',
    'iterate',
    'orbit_closure',
    'orbit_witnesses',
    'check_forward_invariance',
    'check_backward_property',
    'check_density',
    'density_level',
    'brute_force_level',
    'ClassName',
    'ClassLabel',
    'Confidence',
    'CantorEvidence',
    'Decomposition',
    'Verdict',
    'decompose',
    'classify',
    'evidence_class',
    'assert_not_excluded',
    'is_symmetric_cantorval',
    'CSV_HEADER',
    'trace_to_dict',
    'trace_to_json',
    'trace_to_csv',
]
