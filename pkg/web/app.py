"""Flask JSON API over the example systems, their traces and classifications."""

import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

# Load environment variables from .env file
from dotenv import load_dotenv
load_dotenv(Path(__file__).parent.parent / '.env')

import os
from flask import Flask, Response, jsonify, request

from circle import IFSError, Overflow
from constructions import MATRIX_CASES, build_example, classify_bundle
from ifs import iterate, trace_to_csv, trace_to_dict

app = Flask(__name__)

# Deepest trace a request may ask for
MAX_DEPTH = int(os.environ.get('WEB_MAX_DEPTH', 10))


class BadRequest(IFSError):
    """Malformed query parameters."""


def _bundle(n: int):
    if not 1 <= n <= 7:
        raise BadRequest(f"no example {n}; choose 1..7")
    return build_example(n, finite=request.args.get('finite', '').lower() in ('1', 'true', 'yes'))


def _depth(bundle) -> int:
    raw = request.args.get('depth')
    if raw is None:
        return bundle.depth
    try:
        depth = int(raw)
    except ValueError:
        raise BadRequest(f"depth must be an integer, got {raw!r}")
    if not 0 <= depth <= MAX_DEPTH:
        raise BadRequest(f"depth must lie in 0..{MAX_DEPTH}")
    return depth


@app.errorhandler(IFSError)
def handle_domain_error(e):
    return jsonify({'error': str(e), 'type': type(e).__name__}), 400


@app.errorhandler(Overflow)
def handle_overflow(e):
    return jsonify({'error': str(e), 'type': 'Overflow'}), 413


@app.route('/api/examples')
def api_examples():
    """List the examples with their declared classes."""
    examples = []
    for n, finite in MATRIX_CASES:
        bundle = build_example(n, finite=finite)
        examples.append({
            'example': n,
            'finite': finite,
            'title': bundle.title,
            'declared_class': bundle.declared_class.value,
            'default_depth': bundle.depth,
        })
    return jsonify({'examples': examples})


@app.route('/api/examples/<int:n>')
def api_example(n):
    return jsonify(_bundle(n).to_dict())


@app.route('/api/examples/<int:n>/classify')
def api_classify(n):
    bundle = _bundle(n)
    return jsonify(classify_bundle(bundle, _depth(bundle)))


@app.route('/api/examples/<int:n>/trace')
def api_trace(n):
    bundle = _bundle(n)
    trace = iterate(bundle.ifs, bundle.seed, _depth(bundle))
    fmt = request.args.get('format', 'json')
    if fmt == 'csv':
        return Response(trace_to_csv(trace), mimetype='text/csv')
    if fmt != 'json':
        raise BadRequest(f"format must be json or csv, got {fmt!r}")
    return jsonify(trace_to_dict(trace))


@app.route('/health')
def health_check():
    """Health check endpoint for monitoring."""
    return jsonify({
        'status': 'healthy',
        'service': 'circle-ifs'
    })


if __name__ == '__main__':
    app.run(debug=True)
