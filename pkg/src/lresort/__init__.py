"""Sorting the reverse permutation with left-rotate, right-rotate and exchange."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DomainError,
    InvalidMoveError,
    InvalidPermutationError,
    LRESortError,
    SearchAborted,
    SearchExhausted,
    TraceMismatchError,
    UnsupportedSizeError,
)
from .lre import lre_A, lre_count, lre_stage_count, sort_lre  # noqa: E402
from .lre1 import lre1_count, lre1_stage_counts, plan_lre1, sort_lre1  # noqa: E402
from .perm import (  # noqa: E402
    Move,
    apply_move,
    apply_sequence,
    identity_perm,
    k_perm,
    k_prime_perm,
    rank,
    reverse_perm,
    unrank,
)
from .search import SearchLimits, SearchResult, distance_table, optimal_distance  # noqa: E402
from .table import TableRow, build_table  # noqa: E402
from .trace import SortTrace  # noqa: E402
from .verify import VerificationReport, verify_trace  # noqa: E402
