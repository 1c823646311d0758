"""Two-phase sort of the reverse permutation through K'_{floor(n/2),n}.

The first half (stages D1..D4) gathers the larger values, sorted, at the
tail; the second half (D5..D9) sorts the remaining prefix. Stage guards
depend only on n, k = floor(n/2) and k' = ceil(n/2), never on the running
permutation, so every plan is static.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnsupportedSizeError
from .perm import Move, MoveSequence, Permutation, identity_perm, k_prime_perm, reverse_perm
from .trace import SortTrace, Stage

L, R, E = Move.L, Move.R, Move.E

ALGO_ID = "lre1"
STAGE_LABELS = ("D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9")


@dataclass
class StagePlan:
    n: int
    k: int
    k_prime: int
    # (label, block, expected exit or None)
    stages: list[tuple[str, MoveSequence, Permutation | None]] = field(default_factory=list)

    def add(self, label: str, block: MoveSequence, expected: Permutation | None = None) -> None:
        self.stages.append((label, block, expected))


def plan_lre1(n: int) -> StagePlan:
    if n < 3:
        raise UnsupportedSizeError(f"algorithm lre1 needs n >= 3, got {n}")
    k = n // 2
    kp = n - k
    plan = StagePlan(n, k, kp)

    if k != 1:
        plan.add("D1", [E])
    if k >= 3:
        plan.add("D2", [L, E] * (k - 2) + [R, E] * (k - 2) + [L], lemma3_perm(n))
    if k >= 4:
        block = [E, L]
        for i in range(2, k - 2):
            block += [E] + [R, E] * (i - 1) + [L] * i
        plan.add("D3", block)
    plan.add("D4", [L, L] if k != 1 else [L], k_prime_perm(k, n))
    plan.add("D5", [E])
    if kp >= 3:
        plan.add("D6", [L, E] * (kp - 2) + [R, E] * (kp - 2), lemma5_perm(n))
    if kp >= 4:
        plan.add("D7", [L])
        block = [E]
        if kp > 4:
            block.append(L)
            for i in range(2, kp - 3):
                block += [E] + [R, E] * (i - 1) + [L] * i
            i = kp - 3
            block += [E] + [R, E] * (i - 1)
        plan.add("D8", block, lemma6_perm(n))
        plan.add("D9", [R])
    return plan


def sort_lre1(n: int) -> SortTrace:
    plan = plan_lre1(n)
    trace = SortTrace(ALGO_ID, reverse_perm(n))
    for label, block, expected in plan.stages:
        start = len(trace.moves)
        trace.emit(block)
        trace.stages.append(Stage(label, start, len(trace.moves)))
        if expected is not None:
            trace.mark(f"after {label}", expected)
    trace.mark("identity", identity_perm(n))
    return trace


def lemma3_perm(n: int) -> Permutation:
    c = (n + 1) // 2
    return tuple(range(n - 1, c + 1, -1)) + (n,) + tuple(range(c, 0, -1)) + (c + 1,)


def lemma5_perm(n: int) -> Permutation:
    c = (n + 1) // 2
    return (1,) + tuple(range(c - 1, 1, -1)) + tuple(range(c, n + 1))


def lemma6_perm(n: int) -> Permutation:
    return tuple(range(2, n + 1)) + (1,)


_SMALL = {3: 2, 4: 4, 5: 8, 6: 13, 7: 20}


def lre1_count(n: int) -> int:
    if n < 3:
        raise UnsupportedSizeError(f"closed form defined for n >= 3, got {n}")
    if n in _SMALL:
        return _SMALL[n]
    if n % 2 == 0:
        return (3 * n * n - 20 * n + 72) // 4
    return (3 * n * n - 20 * n + 73) // 4


def lre1_stage_counts(n: int) -> dict[str, int]:
    """Per-stage-pair move counts in the regime where every stage runs."""
    if n < 8:
        raise UnsupportedSizeError(f"stage-pair formulas hold for n >= 8, got {n}")
    if n % 2 == 0:
        return {
            "D1+D2": 2 * n - 6,
            "D3+D4": (3 * n * n - 34 * n + 112) // 8,
            "D5+D6": 2 * n - 7,
            "D7+D8": (3 * n * n - 38 * n + 128) // 8,
            "D9": 1,
        }
    return {
        "D1+D2": 2 * n - 8,
        "D3+D4": (3 * n * n - 40 * n + 149) // 8,
        "D5+D6": 2 * n - 5,
        "D7+D8": (3 * n * n - 32 * n + 93) // 8,
        "D9": 1,
    }
