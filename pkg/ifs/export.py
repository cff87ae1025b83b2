"""Plot-ready trace export: JSON levels with stats, or one CSV row per arc."""

import csv
import io
import json
from typing import Dict

from circle import arcset_to_dict, format_rational
from .engine import IterationTrace

CSV_HEADER = ['lo_num', 'lo_den', 'hi_num', 'hi_den', 'level']


def trace_to_dict(trace: IterationTrace) -> Dict:
    stats = []
    for count, min_len, max_len, total in trace.stats:
        stats.append({
            'count': count,
            'min_length': format_rational(min_len),
            'max_length': format_rational(max_len),
            'total_length': format_rational(total),
        })
    return {
        'seed': arcset_to_dict(trace.seed),
        'depth': trace.depth,
        'levels': [arcset_to_dict(level) for level in trace.levels],
        'stats': stats,
    }


def trace_to_json(trace: IterationTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2)


def trace_to_csv(trace: IterationTrace, header: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if header:
        writer.writerow(CSV_HEADER)
    for k, level in enumerate(trace.levels):
        for arc in level.arcs:
            writer.writerow([arc.lo.numerator, arc.lo.denominator,
                             arc.hi.numerator, arc.hi.denominator, k])
    return buffer.getvalue()
