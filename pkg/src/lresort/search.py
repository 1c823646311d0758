"""Exact LRE distances by level-synchronous breadth-first search.

States are Lehmer ranks. The visited set is one bit per state and the move
that first reached each state is kept in a 2-bit store, so the witness is
rebuilt by walking inverse moves back from the identity. Successors that
would undo the previous move (E after E, L after R, R after L) are never
generated.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from . import _kernels as K
from .errors import SearchAborted, SearchExhausted
from .lre1 import lre1_count
from .perm import (
    Move,
    MoveSequence,
    Permutation,
    apply_move,
    identity_perm,
    rank,
    reverse_perm,
    unrank,
    validate,
)

MAX_N = 20  # 20! still fits int64


@dataclass(frozen=True)
class SearchLimits:
    max_depth: int | None = None
    max_states: int | None = None
    max_memory_hint: int | None = None

    def __post_init__(self):
        for name in ("max_depth", "max_states", "max_memory_hint"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")


@dataclass
class SearchStats:
    states_expanded: int = 0
    peak_frontier: int = 0
    elapsed: float = 0.0
    backend: str = ""

    def as_dict(self) -> dict:
        return {
            "states_expanded": self.states_expanded,
            "peak_frontier": self.peak_frontier,
            "elapsed": round(self.elapsed, 6),
            "backend": self.backend,
        }


@dataclass
class SearchResult:
    n: int
    source: Permutation
    distance: int
    witness: MoveSequence
    stats: SearchStats = field(default_factory=SearchStats)


def base_memory(n: int) -> int:
    total = math.factorial(n)
    return (total + 63) // 64 * 8 + (total + 3) // 4


def default_depth_bound(source: Permutation) -> int | None:
    """The LRE1 move count bounds the distance of the reverse permutation only."""
    n = len(source)
    if n >= 3 and source == reverse_perm(n):
        return lre1_count(n)
    return None


def optimal_distance(
    source: Sequence[int],
    limits: SearchLimits | None = None,
    *,
    prune: bool = True,
    backend: str | None = None,
    progress: TextIO | None = None,
) -> SearchResult:
    src = validate(source)
    n = len(src)
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the rank width (n <= {MAX_N})")
    limits = limits or SearchLimits()
    backend = backend or K.default_backend()
    max_depth = limits.max_depth if limits.max_depth is not None else default_depth_bound(src)
    stats = SearchStats(backend=backend)
    t0 = time.perf_counter()

    if src == identity_perm(n):
        stats.elapsed = time.perf_counter() - t0
        return SearchResult(n, src, 0, [], stats)

    _check_memory(n, 0, limits, 0, stats)
    total = math.factorial(n)
    visited = K.alloc_visited(total)
    parents = K.alloc_parents(total)
    source_rank = rank(src)
    K.mark_root(visited, parents, source_rank)
    frontier = np.array([source_rank], dtype=np.int64)

    depth = 0
    while True:
        if frontier.size == 0:
            raise SearchExhausted(f"frontier emptied at depth {depth} without reaching the identity")
        if max_depth is not None and depth >= max_depth:
            raise SearchAborted(f"depth bound {max_depth} reached", depth, stats.states_expanded)
        if limits.max_states is not None and stats.states_expanded + frontier.size > limits.max_states:
            raise SearchAborted(f"state limit {limits.max_states} reached", depth, stats.states_expanded)
        _check_memory(n, frontier.size, limits, depth, stats)
        stats.peak_frontier = max(stats.peak_frontier, int(frontier.size))

        frontier, hit, expanded = K.expand_level(frontier, n, visited, parents, 0, prune, backend)
        stats.states_expanded += int(expanded)
        depth += 1
        if progress is not None:
            print(
                f"level {depth} frontier {frontier.size} expanded {stats.states_expanded}",
                file=progress,
                flush=True,
            )
        if hit:
            break

    witness = _rebuild_witness(parents, n, 0)
    stats.elapsed = time.perf_counter() - t0
    return SearchResult(n, src, depth, witness, stats)


def distance_table(
    n: int,
    limits: SearchLimits | None = None,
    *,
    backend: str | None = None,
    progress: TextIO | None = None,
) -> np.ndarray:
    """Distance from the identity for every rank of S_n, as a uint8 array.

    The generator set is closed under inverses, so this is also the
    distance to the identity.
    """
    if n < 1 or n > MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    limits = limits or SearchLimits()
    backend = backend or K.default_backend()
    total = math.factorial(n)
    stats = SearchStats(backend=backend)
    if limits.max_memory_hint is not None and base_memory(n) + total > limits.max_memory_hint:
        raise SearchAborted("memory hint exceeded", 0, 0)
    dist = np.full(total, 255, dtype=np.uint8)
    visited = K.alloc_visited(total)
    parents = K.alloc_parents(total)
    K.mark_root(visited, parents, 0)
    dist[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    depth = 0
    while frontier.size:
        if limits.max_depth is not None and depth >= limits.max_depth:
            raise SearchAborted(f"depth bound {limits.max_depth} reached", depth, stats.states_expanded)
        if limits.max_states is not None and stats.states_expanded + frontier.size > limits.max_states:
            raise SearchAborted(f"state limit {limits.max_states} reached", depth, stats.states_expanded)
        frontier, _, expanded = K.expand_level(frontier, n, visited, parents, -1, True, backend)
        stats.states_expanded += int(expanded)
        depth += 1
        dist[frontier] = depth
        if progress is not None:
            print(f"level {depth} frontier {frontier.size}", file=progress, flush=True)
    return dist


def _check_memory(n, frontier_size, limits, depth, stats):
    if limits.max_memory_hint is None:
        return
    # frontier in, up to 3x frontier out, int64 each
    need = base_memory(n) + 32 * max(frontier_size, 1)
    if need > limits.max_memory_hint:
        raise SearchAborted(
            f"memory hint {limits.max_memory_hint} bytes exceeded (need ~{need})",
            depth,
            stats.states_expanded,
        )


def _rebuild_witness(parents: np.ndarray, n: int, target: int) -> MoveSequence:
    moves: MoveSequence = []
    r = target
    perm = unrank(r, n)
    while True:
        code = K.parent_code(parents, r)
        if code == K.ROOT:
            break
        m = Move(K.MOVE_CODES[code])
        moves.append(m)
        perm = apply_move(perm, m.inverse)
        r = rank(perm)
    moves.reverse()
    return moves
