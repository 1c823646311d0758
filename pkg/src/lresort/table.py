"""Move-count comparison table and the sort entry point shared by the CLI."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass

from .cache import ResultCache
from .errors import SearchAborted, TraceMismatchError, UnsupportedSizeError
from .lre import sort_lre
from .lre1 import sort_lre1
from .perm import format_moves, identity_perm, parse_moves, reverse_perm
from .search import SearchLimits, SearchResult, SearchStats, optimal_distance
from .trace import SortTrace
from .verify import trivial_trace, verify_trace

log = logging.getLogger(__name__)

ALGORITHMS = ("lre", "lre1", "optimal")
DEEP_N = 11


@dataclass(frozen=True)
class TableRow:
    n: int
    lre: int
    lre1: int
    optimal: int | None = None


def constructive_trace(n: int, algo: str) -> SortTrace:
    if n < 1:
        raise UnsupportedSizeError(f"n must be positive, got {n}")
    if n <= 2:
        return trivial_trace(algo, n)
    if algo == "lre":
        return sort_lre(n)
    if algo == "lre1":
        return sort_lre1(n)
    raise ValueError(f"unknown constructive algorithm {algo!r}")


def checked_count(n: int, algo: str) -> int:
    """Move count from a replayed trace; disagreement with the closed form is fatal."""
    trace = constructive_trace(n, algo)
    report = verify_trace(trace)
    if not report.passed:
        raise TraceMismatchError(
            f"{algo} trace for n={n} failed at {report.first_failure}: "
            f"{report.actual_count} moves, closed form {report.expected_count}"
        )
    return report.actual_count


def optimal_reverse(
    n: int,
    limits: SearchLimits | None = None,
    cache: ResultCache | None = None,
    backend: str | None = None,
    progress=None,
) -> SearchResult:
    if cache is not None:
        hit = cache.get(n, "optimal")
        if hit is not None:
            stats = SearchStats(**{k: v for k, v in hit.get("stats", {}).items() if k in SearchStats.__annotations__})
            return SearchResult(n, reverse_perm(n), hit["count"], parse_moves(hit["moves"]), stats)
    result = optimal_distance(reverse_perm(n), limits, backend=backend, progress=progress)
    if cache is not None:
        cache.put(n, "optimal", result.distance, result.witness, result.stats.as_dict())
    return result


def build_table(
    n_min: int,
    n_max: int,
    include_optimal: bool = False,
    limits: SearchLimits | None = None,
    *,
    deep: bool = False,
    cache: ResultCache | None = None,
    backend: str | None = None,
    progress=None,
) -> list[TableRow]:
    if not 1 <= n_min <= n_max:
        raise UnsupportedSizeError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        opt = None
        if include_optimal:
            if n >= DEEP_N and not deep:
                log.warning("n=%d: optimal search skipped, pass deep=True (--deep) to run it", n)
            else:
                try:
                    opt = optimal_reverse(n, limits, cache, backend, progress).distance
                except SearchAborted as exc:
                    log.warning("n=%d: optimal search aborted: %s", n, exc)
        rows.append(TableRow(n, checked_count(n, "lre"), checked_count(n, "lre1"), opt))
    return rows


def render_rows(rows: list[TableRow], fmt: str = "text") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "lre", "lre1", "optimal"])
        for r in rows:
            w.writerow([r.n, r.lre, r.lre1, "" if r.optimal is None else r.optimal])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt == "text":
        lines = [f"{'n':>3} {'LRE':>6} {'LRE1':>6} {'Search':>7}"]
        for r in rows:
            opt = "-" if r.optimal is None else str(r.optimal)
            lines.append(f"{r.n:>3} {r.lre:>6} {r.lre1:>6} {opt:>7}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def trace_document(trace: SortTrace, stats: dict | None = None) -> dict:
    return {
        "n": trace.n,
        "algo": trace.algorithm,
        "count": len(trace.moves),
        "moves": format_moves(trace.moves),
        "checkpoints": [{"label": c.label, "pos": c.pos, "perm": list(c.expected)} for c in trace.checkpoints],
        "stats": stats or {},
    }


def search_trace(result: SearchResult) -> SortTrace:
    trace = SortTrace("optimal", result.source, list(result.witness))
    trace.mark("identity", identity_perm(result.n))
    return trace

