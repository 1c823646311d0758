"""Stage-wise sort of the reverse permutation through the K_{r,n} chain.

Each stage turns K_{r,n} into K_{r+1,n} with L^(r-1), E, (RE)^(r-1); once
K_{n-2,n} = (3, 4, ..., n, 2, 1) is reached, R, R, E finishes.
"""

from __future__ import annotations

from .errors import DomainError, UnsupportedSizeError
from .perm import Move, identity_perm, k_perm, reverse_perm
from .trace import SortTrace, Stage

L, R, E = Move.L, Move.R, Move.E

ALGO_ID = "lre"


def sort_lre(n: int) -> SortTrace:
    if n < 3:
        raise UnsupportedSizeError(f"algorithm lre needs n >= 3, got {n}")
    trace = SortTrace(ALGO_ID, reverse_perm(n))
    for r in range(1, n - 2):
        start = len(trace.moves)
        trace.emit([L] * (r - 1), E, [R, E] * (r - 1))
        trace.stages.append(Stage(f"r={r}", start, len(trace.moves)))
        trace.mark(f"K_{{{r + 1},{n}}}", k_perm(r + 1, n))
    start = len(trace.moves)
    trace.emit(R, R, E)
    trace.stages.append(Stage(f"r={n - 2}", start, len(trace.moves)))
    trace.mark(f"K_{{{n},{n}}}", identity_perm(n))
    return trace


def lre_stage_count(r: int) -> int:
    """Moves needed to go from K_{r,n} to K_{r+1,n}, for r <= n - 3."""
    if r < 1:
        raise DomainError(f"stage index must be >= 1, got {r}")
    return 3 * r - 2


def lre_A(n: int) -> int:
    """Moves needed to reach K_{n-2,n} from the reverse permutation."""
    _check(n)
    return (3 * n * n - 19 * n + 30) // 2


def lre_count(n: int) -> int:
    _check(n)
    return lre_A(n) + 3


def _check(n: int) -> None:
    if n < 3:
        raise UnsupportedSizeError(f"closed form defined for n >= 3, got {n}")
