"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 search limit hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cache import DEFAULT_PATH, ResultCache
from .errors import DomainError, SearchAborted, TraceMismatchError
from .perm import apply_sequence, format_moves, format_perm, parse_moves, parse_perm
from .search import SearchLimits, optimal_distance
from .table import (
    ALGORITHMS,
    build_table,
    constructive_trace,
    optimal_reverse,
    render_rows,
    search_trace,
    trace_document,
)
from .verify import verify_trace

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _add_limits(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-depth", type=int, help="abort the search beyond this depth")
    p.add_argument("--max-states", type=int, help="abort after expanding this many states")
    p.add_argument("--max-memory", type=int, help="abort if the search would need more bytes than this")
    p.add_argument("--backend", choices=("numba", "numpy"), help="BFS kernel (default: LRESORT_BACKEND or numba)")
    p.add_argument("--progress", action="store_true", help="print per-level progress on stderr")


def _add_cache(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", default=DEFAULT_PATH, help=f"result cache file (default {DEFAULT_PATH})")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lresort", description="Sort permutations with L, R, E moves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="sort the reverse permutation of size N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algo", choices=ALGORITHMS, default="lre1")
    p.add_argument("--trace", action="store_true", help="also print checkpoints")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_limits(p)
    _add_cache(p)

    p = sub.add_parser("search", help="optimal distance from a permutation to the identity")
    p.add_argument("--perm", required=True, help="comma separated, e.g. 4,3,2,1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_limits(p)

    p = sub.add_parser("table", help="compare move counts for a range of n")
    p.add_argument("--min", dest="n_min", type=int, default=3)
    p.add_argument("--max", dest="n_max", type=int, default=10)
    p.add_argument("--optimal", action="store_true", help="run the exact search column")
    p.add_argument("--deep", action="store_true", help="allow the exact search for n >= 11")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_limits(p)
    _add_cache(p)

    p = sub.add_parser("verify", help="replay a constructed trace and check its checkpoints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algo", choices=ALGORITHMS, default="lre1")
    _add_limits(p)
    _add_cache(p)

    p = sub.add_parser("apply", help="apply a move string to a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--moves", required=True, help="e.g. ELRE")
    return parser


def _limits(args) -> SearchLimits:
    return SearchLimits(args.max_depth, args.max_states, args.max_memory)


def _cache(args) -> ResultCache | None:
    return None if args.no_cache else ResultCache(args.cache)


def _progress(args):
    return sys.stderr if args.progress else None


def _trace_for(args):
    if args.algo == "optimal":
        result = optimal_reverse(args.n, _limits(args), _cache(args), args.backend, _progress(args))
        return search_trace(result), result.stats.as_dict()
    return constructive_trace(args.n, args.algo), {}


def cmd_sort(args) -> int:
    trace, stats = _trace_for(args)
    if args.format == "json":
        print(json.dumps(trace_document(trace, stats)))
        return EXIT_OK
    print(f"algo: {trace.algorithm}")
    print(f"n: {trace.n}")
    print(f"count: {len(trace.moves)}")
    print(f"moves: {format_moves(trace.moves)}")
    if args.trace:
        for c in trace.checkpoints:
            print(f"checkpoint {c.label} @ {c.pos}: {format_perm(c.expected)}")
    print(f"result: {format_perm(trace.final())}")
    return EXIT_OK


def cmd_search(args) -> int:
    source = parse_perm(args.perm)
    result = optimal_distance(source, _limits(args), backend=args.backend, progress=_progress(args))
    if args.format == "json":
        doc = trace_document(search_trace(result), result.stats.as_dict())
        doc["source"] = list(source)
        print(json.dumps(doc))
        return EXIT_OK
    print(f"distance: {result.distance}")
    print(f"moves: {format_moves(result.witness)}")
    s = result.stats
    print(f"states expanded: {s.states_expanded}, peak frontier: {s.peak_frontier}, {s.elapsed:.3f}s ({s.backend})")
    return EXIT_OK


def cmd_table(args) -> int:
    rows = build_table(
        args.n_min,
        args.n_max,
        args.optimal,
        _limits(args),
        deep=args.deep,
        cache=_cache(args),
        backend=args.backend,
        progress=_progress(args),
    )
    sys.stdout.write(render_rows(rows, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    trace, _ = _trace_for(args)
    report = verify_trace(trace)
    for c in report.checkpoints:
        status = "pass" if c.passed else "FAIL"
        line = f"{status} {c.label} @ expected {format_perm(c.expected)}"
        if not c.passed:
            line += f" got {format_perm(c.actual)}"
        print(line)
    count = f"count {report.actual_count}"
    if report.expected_count is not None:
        count += f" (closed form {report.expected_count})"
    print(("pass " if report.count_passed else "FAIL ") + count)
    print(f"{'PASS' if report.passed else 'FAIL'} {trace.algorithm} n={trace.n}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_apply(args) -> int:
    perm = parse_perm(args.perm)
    result = apply_sequence(perm, parse_moves(args.moves))
    print(format_perm(result))
    return EXIT_OK


COMMANDS = {
    "sort": cmd_sort,
    "search": cmd_search,
    "table": cmd_table,
    "verify": cmd_verify,
    "apply": cmd_apply,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except SearchAborted as exc:
        print(f"error: search aborted: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except TraceMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
