"""BFS level expansion over Lehmer ranks, in numba and in plain numpy.

Both backends share one contract so the driver in ``search`` can switch
between them:

    expand_level(frontier, n, visited, parents, target, prune)
        -> (next_frontier, hit, expanded)

``visited`` is a bit-per-state uint64 array; ``parents`` packs a 2-bit move
code per state (E=0, R=1, L=2, 3 = root). Successors are generated in the
order E, R, L and a state's parent is whichever frontier entry reached it
first, so both backends return identical frontiers in identical order.
``target`` is a rank to stop at, or -1 for a full sweep. ``expanded`` is the
number of frontier states whose successors were generated.

Set ``LRESORT_BACKEND=numpy`` to skip numba entirely.
"""

from __future__ import annotations

import math
import os

import numpy as np

MOVE_E, MOVE_R, MOVE_L, ROOT = 0, 1, 2, 3
MOVE_CODES = "ERL"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None


def default_backend() -> str:
    choice = os.environ.get("LRESORT_BACKEND", "").strip().lower()
    if choice in ("numpy", "numba"):
        if choice == "numba" and not HAVE_NUMBA:
            return "numpy"
        return choice
    return "numba" if HAVE_NUMBA else "numpy"


def factorials(n: int) -> np.ndarray:
    return np.array([math.factorial(i) for i in range(n + 1)], dtype=np.int64)


def alloc_visited(total: int) -> np.ndarray:
    return np.zeros((total + 63) // 64, dtype=np.uint64)


def alloc_parents(total: int) -> np.ndarray:
    return np.zeros((total + 3) // 4, dtype=np.uint8)


def mark_root(visited: np.ndarray, parents: np.ndarray, r: int) -> None:
    visited[r >> 6] |= np.uint64(1) << np.uint64(r & 63)
    parents[r >> 2] |= np.uint8(ROOT << (2 * (r & 3)))


def parent_code(parents: np.ndarray, r: int) -> int:
    return (int(parents[r >> 2]) >> (2 * (r & 3))) & 3


def is_visited(visited: np.ndarray, r: int) -> bool:
    return bool((int(visited[r >> 6]) >> (r & 63)) & 1)


def successor_columns(n: int) -> np.ndarray:
    """Gather indices for E, R, L on 0-based position arrays."""
    e = np.arange(n)
    if n >= 2:
        e[0], e[1] = 1, 0
    r = np.roll(np.arange(n), 1)
    l = np.roll(np.arange(n), -1)
    return np.stack([e, r, l]).astype(np.int64)


# ---------------------------------------------------------------- numpy path

def np_rank(P: np.ndarray, fact: np.ndarray) -> np.ndarray:
    n = P.shape[1]
    out = np.zeros(P.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller = (P[:, i + 1:] < P[:, i:i + 1]).sum(axis=1)
        out += smaller * fact[n - 1 - i]
    return out


def np_unrank(ranks: np.ndarray, n: int, fact: np.ndarray) -> np.ndarray:
    P = np.empty((ranks.shape[0], n), dtype=np.int8)
    rem = ranks.copy()
    for i in range(n):
        P[:, i] = rem // fact[n - 1 - i]
        rem %= fact[n - 1 - i]
    # Lehmer digits -> values, right to left
    for i in range(n - 2, -1, -1):
        tail = P[:, i + 1:]
        tail += tail >= P[:, i:i + 1]
    return P


def _np_expand_chunk(frontier, n, visited, parents, target, prune, fact, cols):
    F = frontier.shape[0]
    P = np_unrank(frontier, n, fact)
    cand = np.empty((F, 3), dtype=np.int64)
    for m in range(3):
        cand[:, m] = np_rank(P[:, cols[m]], fact)
    cand = cand.ravel()
    keep = np.ones(3 * F, dtype=bool)
    if prune:
        last = (parents[frontier >> 2] >> (2 * (frontier & 3)).astype(np.uint8)) & 3
        keep3 = keep.reshape(F, 3)
        keep3[:, MOVE_E] &= last != MOVE_E
        keep3[:, MOVE_R] &= last != MOVE_L
        keep3[:, MOVE_L] &= last != MOVE_R
    seen = (visited[cand >> 6] >> (cand & 63).astype(np.uint64)) & np.uint64(1)
    keep &= seen == 0
    idx = np.flatnonzero(keep)
    _, first = np.unique(cand[idx], return_index=True)
    idx = idx[np.sort(first)]

    expanded = F
    hit = False
    if target >= 0:
        where = np.flatnonzero(cand[idx] == target)
        if where.size:
            hit = True
            idx = idx[: where[0] + 1]
            expanded = int(idx[-1] // 3) + 1

    new = cand[idx]
    codes = (idx % 3).astype(np.uint8)
    np.bitwise_or.at(visited, new >> 6, np.uint64(1) << (new & 63).astype(np.uint64))
    np.bitwise_or.at(parents, new >> 2, codes << (2 * (new & 3)).astype(np.uint8))
    return new, hit, expanded


def np_expand_level(frontier, n, visited, parents, target, prune, chunk=1 << 17):
    fact = factorials(n)
    cols = successor_columns(n)
    out = []
    expanded = 0
    for start in range(0, frontier.shape[0], chunk):
        new, hit, done = _np_expand_chunk(
            frontier[start:start + chunk], n, visited, parents, target, prune, fact, cols
        )
        out.append(new)
        expanded += done
        if hit:
            return np.concatenate(out), True, expanded
    if not out:
        return np.empty(0, dtype=np.int64), False, 0
    return np.concatenate(out), False, expanded


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _nb_unrank(r, n, fact, out):
        for i in range(n):
            f = fact[n - 1 - i]
            out[i] = r // f
            r = r % f
        for i in range(n - 2, -1, -1):
            for j in range(i + 1, n):
                if out[j] >= out[i]:
                    out[j] += 1

    @njit(cache=True)
    def _nb_rank(p, n, fact):
        r = 0
        for i in range(n - 1):
            c = 0
            for j in range(i + 1, n):
                if p[j] < p[i]:
                    c += 1
            r += c * fact[n - 1 - i]
        return r

    @njit(cache=True)
    def _nb_expand(frontier, n, visited, parents, target, prune, fact, cols):
        F = frontier.shape[0]
        out = np.empty(3 * F, dtype=np.int64)
        count = 0
        p = np.empty(n, dtype=np.int64)
        q = np.empty(n, dtype=np.int64)
        for k in range(F):
            u = frontier[k]
            _nb_unrank(u, n, fact, p)
            last = (parents[u >> 2] >> (2 * (u & 3))) & 3
            for m in range(3):
                if prune:
                    if m == 0 and last == 0:
                        continue
                    if m == 1 and last == 2:
                        continue
                    if m == 2 and last == 1:
                        continue
                for j in range(n):
                    q[j] = p[cols[m, j]]
                v = _nb_rank(q, n, fact)
                word = v >> 6
                bit = np.uint64(1) << np.uint64(v & 63)
                if visited[word] & bit:
                    continue
                visited[word] |= bit
                parents[v >> 2] |= np.uint8(m << (2 * (v & 3)))
                out[count] = v
                count += 1
                if v == target:
                    return out[:count], True, k + 1
        return out[:count], False, F


def nb_expand_level(frontier, n, visited, parents, target, prune):
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba backend requested but numba is not importable")
    return _nb_expand(
        frontier, n, visited, parents, np.int64(target), bool(prune), factorials(n), successor_columns(n)
    )


def expand_level(frontier, n, visited, parents, target, prune, backend=None):
    backend = backend or default_backend()
    if backend == "numba":
        return nb_expand_level(frontier, n, visited, parents, target, prune)
    if backend == "numpy":
        return np_expand_level(frontier, n, visited, parents, target, prune)
    raise ValueError(f"unknown backend {backend!r}")
