"""Classification of the example bundles and the full acceptance matrix."""

import logging
from typing import Dict, List, Optional

from tqdm import tqdm

from circle import IFSError
from ifs import (
    assert_not_excluded,
    classify,
    decompose,
    is_symmetric_cantorval,
    iterate,
)
from .examples import ExampleBundle, build_example

logger = logging.getLogger(__name__)

MATRIX_CASES = [(1, False), (1, True), (2, False), (3, False), (4, False), (5, False), (6, False), (7, False)]


def classify_bundle(bundle: ExampleBundle, depth: Optional[int] = None, progress: bool = False) -> Dict:
    """Iterate, decompose and classify one bundle against its declared class."""
    depth = bundle.depth if depth is None else depth
    trace = iterate(bundle.ifs, bundle.seed, depth, progress=progress)
    decomposition = decompose(trace, declared_isolated=bundle.witnesses.n_points)
    verdict = assert_not_excluded(decomposition)
    label = classify(decomposition, bundle.declared_class)
    result = {'example': bundle.number, 'depth': depth}
    result.update(label.to_dict())
    result['decomposition'] = decomposition.to_dict()
    result['excluded_case'] = {'passed': verdict.passed, 'case': verdict.case}
    return result


def run_matrix(depth: Optional[int] = None, progress: bool = False) -> List[Dict]:
    """One row per example: expected class, classified class and the Cantorval check."""
    rows = []
    for n, finite in tqdm(MATRIX_CASES, desc="Examples", disable=not progress):
        bundle = build_example(n, finite=finite)
        row = {
            'example': n,
            'variant': 'finite' if finite else 'default',
            'expected': bundle.declared_class.value,
            'label': None,
            'cantorval': None,
            'ok': False,
            'error': None,
        }
        try:
            use_depth = bundle.depth if depth is None else depth
            trace = iterate(bundle.ifs, bundle.seed, use_depth)
            decomposition = decompose(trace, declared_isolated=bundle.witnesses.n_points)
            row['label'] = classify(decomposition, bundle.declared_class).name.value
            row['cantorval'] = is_symmetric_cantorval(trace, depth_checks=2)
            row['ok'] = row['cantorval'] == (n == 7)
        except IFSError as e:
            logger.warning("example %d (%s) failed: %s", n, row['variant'], e)
            row['error'] = str(e)
        rows.append(row)
    return rows
