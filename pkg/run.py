#!/usr/bin/env python
"""Main entry point for the circle IFS toolkit.

Exit codes: 0 success, 1 domain error, 2 resource overflow, 64 usage error.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_OVERFLOW = 2
EXIT_USAGE = 64


class CLIParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational_arg(text: str) -> Fraction:
    from circle import to_rational
    try:
        return to_rational(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}")


def example_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"example must be 1..7, got {text!r}")
    if not 1 <= n <= 7:
        raise argparse.ArgumentTypeError(f"example must be 1..7, got {n}")
    return n


def depth_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"depth must be an integer >= 0, got {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError(f"depth must be >= 0, got {k}")
    return k


@dataclass
class RunConfig:
    example: int = 1
    depth: Optional[int] = None
    max_word_len: int = 8
    eps: Fraction = Fraction(1, 100)
    output_path: Optional[str] = None
    format: str = 'json'
    finite: bool = False
    progress: bool = True

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        return cls(
            example=getattr(args, 'example', None) or 1,
            depth=getattr(args, 'depth', None),
            max_word_len=getattr(args, 'max_len', None) or 8,
            eps=getattr(args, 'eps', None) or Fraction(1, 100),
            output_path=getattr(args, 'out', None),
            format=getattr(args, 'format', None) or 'json',
            finite=getattr(args, 'finite', False),
            progress=not args.quiet,
        )


def emit(text: str, output_path: Optional[str] = None):
    """Write output to a file when asked, else to stdout."""
    if output_path:
        Path(output_path).write_text(text)
        print(f"Wrote {output_path}")
    else:
        print(text, end='' if text.endswith('\n') else '\n')


def to_json(data) -> str:
    return json.dumps(data, indent=2) + '\n'


def load_plmap(text: str):
    """PLMap from a JSON string or a path to a JSON file."""
    from circle import NotAHomeomorphism, plmap_from_dict
    try:
        raw = text if text.lstrip().startswith('{') else Path(text).read_text()
        return plmap_from_dict(json.loads(raw))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise NotAHomeomorphism(f"malformed PL map JSON: {e}") from e


def build_parser() -> CLIParser:
    parser = CLIParser(prog="ifs", description="Minimal sets of iterated function systems on the circle")
    parser.add_argument("--verbose", "-v", action="store_true", help="Show debug logging")
    parser.add_argument("--quiet", "-q", action="store_true", help="Hide progress bars")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Example command
    example_parser = subparsers.add_parser("example", help="Build an example system")
    example_parser.add_argument("n", type=example_arg, help="Example number (1-7)")
    example_parser.add_argument("--print", action="store_true", help="Emit the full bundle as JSON")
    example_parser.add_argument("--finite", action="store_true", help="Finite variant of Example 1")

    # Iterate command
    iterate_parser = subparsers.add_parser("iterate", help="Iterate the set dynamics and export the trace")
    iterate_parser.add_argument("--example", type=example_arg, required=True, help="Example number (1-7)")
    iterate_parser.add_argument("--depth", type=depth_arg, default=None, help="Number of levels (default: per example)")
    iterate_parser.add_argument("--out", type=str, help="Output file (default: stdout)")
    iterate_parser.add_argument("--format", choices=["json", "csv"], default="json", help="Trace format")
    iterate_parser.add_argument("--finite", action="store_true", help="Finite variant of Example 1")

    # Orbit command
    orbit_parser = subparsers.add_parser("orbit", help="Enumerate the orbit of a point")
    orbit_parser.add_argument("--example", type=example_arg, required=True, help="Example number (1-7)")
    orbit_parser.add_argument("--point", type=rational_arg, required=True, help="Start point p/q")
    orbit_parser.add_argument("--max-len", type=depth_arg, default=8, help="Maximum word length")
    orbit_parser.add_argument("--eps", type=rational_arg, help="Also report the word length at which the orbit is eps-dense in the seed")
    orbit_parser.add_argument("--finite", action="store_true", help="Finite variant of Example 1")

    # Classify command
    classify_parser = subparsers.add_parser("classify", help="Classify the minimal set of an example")
    classify_parser.add_argument("--example", type=example_arg, required=True, help="Example number (1-7)")
    classify_parser.add_argument("--depth", type=depth_arg, default=None, help="Iteration depth (default: per example)")
    classify_parser.add_argument("--finite", action="store_true", help="Finite variant of Example 1")

    # Cantorval command
    cantorval_parser = subparsers.add_parser("cantorval", help="Check the symmetric Cantorval predicate")
    cantorval_parser.add_argument("--example", type=example_arg, required=True, help="Example number (1-7)")
    cantorval_parser.add_argument("--depth", type=depth_arg, default=None, help="Iteration depth (default: per example)")
    cantorval_parser.add_argument("--checks", type=int, default=2, help="Number of trailing levels checked")
    cantorval_parser.add_argument("--finite", action="store_true", help="Finite variant of Example 1")

    # Psi command
    psi_parser = subparsers.add_parser("psi", help="Gap-matching map of the Cantorval example")
    psi_parser.add_argument("--depth", type=depth_arg, default=None, help="Matching depth (default: until data runs out)")
    psi_parser.add_argument("--gap-depth", type=depth_arg, default=4, help="Word length of the gap data")
    psi_parser.add_argument("--direction", choices=["plus", "minus"], default="plus", help="Which side of [c, d]")

    # Verify-all command
    verify_parser = subparsers.add_parser("verify-all", help="Run the classification matrix over all examples")
    verify_parser.add_argument("--depth", type=depth_arg, default=None, help="Iteration depth (default: per example)")

    # PL map commands
    plmap_parser = subparsers.add_parser("plmap", help="Evaluate, compose or invert PL maps given as JSON")
    plmap_sub = plmap_parser.add_subparsers(dest="plmap_command", help="PL map operation")
    eval_parser = plmap_sub.add_parser("eval", help="Evaluate a map at a point")
    eval_parser.add_argument("--map", required=True, help="PL map JSON or file")
    eval_parser.add_argument("--x", type=rational_arg, required=True, help="Point p/q")
    compose_parser = plmap_sub.add_parser("compose", help="outer after inner")
    compose_parser.add_argument("--outer", required=True, help="PL map JSON or file")
    compose_parser.add_argument("--inner", required=True, help="PL map JSON or file")
    invert_parser = plmap_sub.add_parser("invert", help="Inverse map")
    invert_parser.add_argument("--map", required=True, help="PL map JSON or file")

    # Serve command
    serve_parser = subparsers.add_parser("serve", help="Start the JSON web API")
    serve_parser.add_argument("--host", type=str, default=None,
                              help="Host to bind to (default: 127.0.0.1, env: HOST)")
    serve_parser.add_argument("--port", type=int, default=None,
                              help="Port to run on (default: 5000, env: PORT)")
    serve_parser.add_argument("--debug", action="store_true", help="Enable debug mode")

    return parser


def run_command(args) -> int:
    config = RunConfig.from_args(args)

    if args.command == "example":
        from constructions import build_example
        bundle = build_example(args.n, finite=args.finite)
        if args.print:
            emit(to_json(bundle.to_dict()))
            return EXIT_OK
        print(f"\nExample {bundle.number}: {bundle.title}")
        print(f"{'=' * 40}")
        print(f"Declared class: {bundle.declared_class.value}")
        print(f"Generators: {', '.join(bundle.ifs.names)}")
        print(f"Seed: {bundle.seed}")
        print(f"Default depth: {bundle.depth}")
        for name, value in bundle.constants.items():
            print(f"  {name}: {value}")

    elif args.command == "iterate":
        from constructions import build_example
        from ifs import iterate, trace_to_csv, trace_to_json
        bundle = build_example(config.example, finite=config.finite)
        depth = bundle.depth if config.depth is None else config.depth
        trace = iterate(bundle.ifs, bundle.seed, depth, progress=config.progress)
        text = trace_to_csv(trace) if config.format == 'csv' else trace_to_json(trace)
        emit(text, config.output_path)

    elif args.command == "orbit":
        from circle import format_rational
        from constructions import build_example
        from ifs import density_level, orbit_witnesses
        bundle = build_example(config.example, finite=config.finite)
        witnesses = orbit_witnesses(bundle.ifs, args.point, args.max_len)
        data = {
            'example': config.example,
            'point': format_rational(args.point),
            'max_len': args.max_len,
            'count': len(witnesses),
            'points': [{'point': format_rational(p), 'word': bundle.ifs.word_name(w)}
                       for p, w in sorted(witnesses.items())],
        }
        if args.eps is not None:
            level = density_level(bundle.ifs, args.point, bundle.seed, args.eps, args.max_len)
            data['eps'] = format_rational(args.eps)
            data['dense_at_length'] = level
        emit(to_json(data))

    elif args.command == "classify":
        from constructions import build_example, classify_bundle
        bundle = build_example(config.example, finite=config.finite)
        emit(to_json(classify_bundle(bundle, config.depth, progress=config.progress)))

    elif args.command == "cantorval":
        from constructions import build_example
        from ifs import is_symmetric_cantorval, iterate
        bundle = build_example(config.example, finite=config.finite)
        depth = bundle.depth if config.depth is None else config.depth
        trace = iterate(bundle.ifs, bundle.seed, depth, progress=config.progress)
        result = is_symmetric_cantorval(trace, depth_checks=args.checks)
        emit(to_json({'example': config.example, 'depth': depth, 'symmetric_cantorval': result}))

    elif args.command == "psi":
        from dataclasses import replace
        from circle import Ambient, format_rational, pl_from_breakpoints, plmap_to_dict
        from constructions import Example7Params, gaps_to_depth, make_three_branch, match_gaps
        params = replace(Example7Params(), gap_depth=args.gap_depth, match_depth=args.depth)
        branches = make_three_branch(params.I_prime, params.I)
        charts = params.plus_charts if args.direction == 'plus' else params.minus_charts
        host, gap0, gap1 = branches.meta['I_prime'], branches.meta['I0'], branches.meta['I1']
        dom = gaps_to_depth(branches, host, gap0, gap1, params.gap_depth, charts[0])
        cod = gaps_to_depth(branches, host, gap0, gap1, params.gap_depth, charts[1])
        matching = match_gaps(dom, cod, params.match_depth)
        psi = pl_from_breakpoints(
            matching.breakpoints(),
            Ambient.interval(matching.domain_host.lo, matching.domain_host.hi),
            Ambient.interval(matching.codomain_host.lo, matching.codomain_host.hi))
        emit(to_json({
            'direction': args.direction,
            'gap_depth': params.gap_depth,
            'match_depth': params.match_depth,
            'pairs': len(matching.pairs),
            'levels': matching.levels,
            'modulus': format_rational(matching.modulus()),
            'map': plmap_to_dict(psi),
        }))

    elif args.command == "verify-all":
        from constructions import run_matrix
        rows = run_matrix(config.depth, progress=config.progress)
        print("\nAcceptance matrix")
        print(f"{'=' * 40}")
        for row in rows:
            status = 'ok' if row['ok'] else 'FAIL'
            name = f"{row['example']}" + (' (finite)' if row['variant'] == 'finite' else '')
            detail = row['error'] or f"{row['label']}, cantorval={row['cantorval']}"
            print(f"  Example {name}: expected {row['expected']} -> {detail} [{status}]")
        failed = sum(1 for row in rows if not row['ok'])
        print(f"\n{len(rows) - failed}/{len(rows)} passed")
        return EXIT_OK if failed == 0 else EXIT_DOMAIN

    elif args.command == "plmap":
        from circle import compose, evaluate, format_rational, invert, plmap_to_dict
        if args.plmap_command == "eval":
            m = load_plmap(args.map)
            emit(to_json({'x': format_rational(args.x), 'y': format_rational(evaluate(m, args.x))}))
        elif args.plmap_command == "compose":
            emit(to_json(plmap_to_dict(compose(load_plmap(args.outer), load_plmap(args.inner)))))
        elif args.plmap_command == "invert":
            emit(to_json(plmap_to_dict(invert(load_plmap(args.map)))))
        else:
            print("usage: ifs plmap {eval,compose,invert} ...", file=sys.stderr)
            return EXIT_USAGE

    elif args.command == "serve":
        from web.app import app

        # Get settings from args or environment variables
        host = args.host or os.environ.get('HOST', '127.0.0.1')
        port = args.port or int(os.environ.get('PORT', 5000))
        debug = args.debug or os.environ.get('DEBUG', '').lower() in ('1', 'true', 'yes')

        print(f"Starting server at http://{host}:{port}")
        app.run(debug=debug, host=host, port=port)

    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    from circle import IFSError, Overflow
    try:
        return run_command(args)
    except Overflow as e:
        print(f"Overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except IFSError as e:
        print(f"Error ({type(e).__name__}): {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
