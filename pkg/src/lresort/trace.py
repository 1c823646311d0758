from __future__ import annotations

from dataclasses import dataclass, field

from .perm import Move, MoveSequence, Permutation, apply_sequence


@dataclass(frozen=True)
class Checkpoint:
    label: str
    pos: int
    expected: Permutation


@dataclass(frozen=True)
class Stage:
    label: str
    start: int
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass
class SortTrace:
    """Moves emitted by a constructive sort plus the states it promises.

    ``checkpoints[i].pos`` counts moves from the start, so applying
    ``moves[:pos]`` to ``input`` must give ``expected``.
    """

    algorithm: str
    input: Permutation
    moves: MoveSequence = field(default_factory=list)
    checkpoints: list[Checkpoint] = field(default_factory=list)
    stages: list[Stage] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.input)

    def __len__(self) -> int:
        return len(self.moves)

    def emit(self, *blocks: Move | list[Move]) -> None:
        for block in blocks:
            if isinstance(block, Move):
                self.moves.append(block)
            else:
                self.moves.extend(block)

    def mark(self, label: str, expected: Permutation) -> None:
        self.checkpoints.append(Checkpoint(label, len(self.moves), tuple(expected)))

    def stage_lengths(self) -> dict[str, int]:
        return {s.label: len(s) for s in self.stages}

    def final(self) -> Permutation:
        return apply_sequence(self.input, self.moves)
