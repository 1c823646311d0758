"""Permutations over {1..n} and the three LRE generators.

Permutations are plain tuples of 1-based ints. Moves never mutate their
input. Ranks use the lexicographic Lehmer code, so the identity has rank 0
and the reverse permutation has rank n! - 1.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, Sequence

from .errors import DomainError, InvalidMoveError, InvalidPermutationError

Permutation = tuple[int, ...]


class Move(str, enum.Enum):
    L = "L"
    R = "R"
    E = "E"

    @property
    def inverse(self) -> "Move":
        return _INVERSE[self]

    def __str__(self) -> str:
        return self.value


_INVERSE = {Move.L: Move.R, Move.R: Move.L, Move.E: Move.E}

MoveSequence = list[Move]


def validate(p: Sequence[int]) -> Permutation:
    """Return ``p`` as a tuple, raising if it is not a permutation of 1..n."""
    t = tuple(int(x) for x in p)
    if not t:
        raise InvalidPermutationError("permutation must have at least one element")
    if sorted(t) != list(range(1, len(t) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(t)}: {format_perm(t)}")
    return t


def apply_move(p: Sequence[int], m: Move | str) -> Permutation:
    m = Move(m)
    t = tuple(p)
    if m is Move.L:
        return t[1:] + t[:1]
    if m is Move.R:
        return t[-1:] + t[:-1]
    if len(t) < 2:
        raise InvalidMoveError("E needs at least two elements")
    return (t[1], t[0]) + t[2:]


def apply_sequence(p: Sequence[int], moves: Iterable[Move | str]) -> Permutation:
    t = tuple(p)
    for m in moves:
        t = apply_move(t, m)
    return t


def invert_sequence(moves: Iterable[Move | str]) -> MoveSequence:
    return [Move(m).inverse for m in reversed(list(moves))]


def reverse_perm(n: int) -> Permutation:
    _check_size(n)
    return tuple(range(n, 0, -1))


def identity_perm(n: int) -> Permutation:
    _check_size(n)
    return tuple(range(1, n + 1))


def k_perm(r: int, n: int) -> Permutation:
    """Largest ``r`` values ascending, then the rest descending."""
    _check_r(r, n)
    return tuple(range(n - r + 1, n + 1)) + tuple(range(n - r, 0, -1))


def k_prime_perm(r: int, n: int) -> Permutation:
    """Smallest ``n - r`` values descending, then the largest ``r`` ascending."""
    _check_r(r, n)
    return tuple(range(n - r, 0, -1)) + tuple(range(n - r + 1, n + 1))


def rank(p: Sequence[int]) -> int:
    """Lexicographic Lehmer rank in [0, n!)."""
    t = validate(p)
    n = len(t)
    value = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if t[j] < t[i])
        value += smaller * math.factorial(n - 1 - i)
    return value


def unrank(value: int, n: int) -> Permutation:
    _check_size(n)
    total = math.factorial(n)
    if not 0 <= value < total:
        raise DomainError(f"rank {value} outside [0, {total}) for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        digit, value = divmod(value, math.factorial(i))
        out.append(pool.pop(digit))
    return tuple(out)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_perm(text: str) -> Permutation:
    """Parse ``4,3,2,1`` or ``(4,3,2,1)``; whitespace is ignored."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        values = [int(tok) for tok in body.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise InvalidPermutationError(f"cannot parse permutation {text!r}") from exc
    return validate(values)


def format_moves(moves: Iterable[Move | str]) -> str:
    return "".join(Move(m).value for m in moves)


def parse_moves(text: str) -> MoveSequence:
    try:
        return [Move(ch) for ch in text.strip().upper()]
    except ValueError as exc:
        raise InvalidMoveError(f"moves must use only L, R, E: {text!r}") from exc


def _check_size(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


def _check_r(r: int, n: int) -> None:
    _check_size(n)
    if not 1 <= r <= n:
        raise DomainError(f"r must lie in 1..{n}, got {r}")
