from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, LRESortError, UnsupportedSizeError
from .lre import lre_count
from .lre1 import lre1_count
from .perm import Move, Permutation, apply_move, identity_perm, reverse_perm
from .trace import SortTrace

CLOSED_FORMS = {"lre": lre_count, "lre1": lre1_count}


@dataclass(frozen=True)
class CheckpointOutcome:
    label: str
    passed: bool
    expected: Permutation
    actual: Permutation


@dataclass
class VerificationReport:
    algorithm: str
    n: int
    checkpoints: list[CheckpointOutcome] = field(default_factory=list)
    final_passed: bool = False
    final: Permutation = ()
    expected_count: int | None = None
    actual_count: int = 0

    @property
    def count_passed(self) -> bool:
        return self.expected_count is None or self.expected_count == self.actual_count

    @property
    def passed(self) -> bool:
        return self.final_passed and self.count_passed and all(c.passed for c in self.checkpoints)

    @property
    def first_failure(self) -> str | None:
        for c in self.checkpoints:
            if not c.passed:
                return c.label
        if not self.final_passed:
            return "final"
        if not self.count_passed:
            return "count"
        return None


def expected_count(algorithm: str, n: int) -> int | None:
    """Closed-form count for ``algorithm`` at size ``n``, or None if there is none."""
    if n <= 2 and algorithm in CLOSED_FORMS:
        return n - 1
    fn = CLOSED_FORMS.get(algorithm)
    if fn is None:
        return None
    try:
        return fn(n)
    except UnsupportedSizeError:
        return None


def trivial_trace(algorithm: str, n: int) -> SortTrace:
    """Traces for n <= 2, which both constructions leave undefined."""
    if n not in (1, 2):
        raise UnsupportedSizeError(f"trivial trace only for n in (1, 2), got {n}")
    trace = SortTrace(algorithm, reverse_perm(n))
    if n == 2:
        trace.emit(Move.E)
    trace.mark("identity", identity_perm(n))
    return trace


def verify_trace(t: SortTrace) -> VerificationReport:
    """Replay ``t`` and compare every checkpoint; mismatches are reported, not raised."""
    n = len(t.input)
    positions = [c.pos for c in t.checkpoints]
    if any(p < 0 or p > len(t.moves) for p in positions):
        raise DomainError(f"checkpoint position outside 0..{len(t.moves)}")
    if positions != sorted(positions):
        raise DomainError("checkpoints must be ordered by position")

    report = VerificationReport(t.algorithm, n, expected_count=expected_count(t.algorithm, n))
    report.actual_count = len(t.moves)
    state = tuple(t.input)
    pending = list(t.checkpoints)
    for i in range(len(t.moves) + 1):
        while pending and pending[0].pos == i:
            c = pending.pop(0)
            report.checkpoints.append(CheckpointOutcome(c.label, state == c.expected, c.expected, state))
        if i == len(t.moves):
            break
        try:
            state = apply_move(state, t.moves[i])
        except LRESortError as exc:
            raise DomainError(f"malformed trace at move {i}: {exc}") from exc
    report.final = state
    report.final_passed = state == identity_perm(n)
    return report
