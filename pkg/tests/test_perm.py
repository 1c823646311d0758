import math
import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from lresort.errors import DomainError, InvalidMoveError, InvalidPermutationError
from lresort.perm import (
    Move,
    apply_move,
    apply_sequence,
    format_moves,
    format_perm,
    identity_perm,
    invert_sequence,
    k_perm,
    k_prime_perm,
    parse_moves,
    parse_perm,
    rank,
    reverse_perm,
    unrank,
    validate,
)

from oracles import lex_ranks

L, R, E = Move.L, Move.R, Move.E


@st.composite
def perms(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


moves = st.lists(st.sampled_from([L, R, E]), max_size=40)


def test_apply_move_examples():
    assert apply_move((4, 3, 2, 1), E) == (3, 4, 2, 1)
    assert apply_move((1, 2, 3, 4), L) == (2, 3, 4, 1)
    assert apply_move((1, 2, 3, 4), R) == (4, 1, 2, 3)


def test_lemma3_state_at_8():
    seq = [E] + [L, E] * 2 + [R, E] * 2 + [L]
    assert apply_sequence(reverse_perm(8), seq) == (7, 6, 8, 4, 3, 2, 1, 5)


def test_apply_sequence_examples():
    assert apply_sequence((3, 2, 1), [L, E]) == (1, 2, 3)
    assert apply_sequence(reverse_perm(6), []) == reverse_perm(6)
    assert apply_sequence((5, 4, 3, 2, 1), "E") == (4, 5, 3, 2, 1)


def test_move_does_not_mutate():
    p = [3, 1, 2]
    apply_move(p, E)
    assert p == [3, 1, 2]


def test_singleton_rules():
    assert apply_move((1,), L) == (1,)
    assert apply_move((1,), R) == (1,)
    with pytest.raises(InvalidMoveError):
        apply_move((1,), E)


def test_pair_moves_coincide():
    assert apply_move((2, 1), L) == apply_move((2, 1), R) == apply_move((2, 1), E) == (1, 2)


def test_constructions():
    assert reverse_perm(1) == (1,)
    assert reverse_perm(2) == (2, 1)
    assert reverse_perm(4) == (4, 3, 2, 1)
    assert identity_perm(1) == (1,)
    assert identity_perm(3) == (1, 2, 3)
    assert k_perm(1, 5) == (5, 4, 3, 2, 1)
    assert k_perm(5, 5) == (1, 2, 3, 4, 5)
    assert k_perm(2, 5) == (4, 5, 3, 2, 1)
    assert k_prime_perm(4, 8) == (4, 3, 2, 1, 5, 6, 7, 8)
    assert k_prime_perm(5, 10) == (5, 4, 3, 2, 1, 6, 7, 8, 9, 10)


@pytest.mark.parametrize("n", range(1, 13))
def test_k_boundaries(n):
    assert k_perm(1, n) == reverse_perm(n)
    assert k_perm(n, n) == identity_perm(n)
    assert k_prime_perm(n, n) == identity_perm(n)


@pytest.mark.parametrize("r,n", [(0, 5), (6, 5), (-1, 3)])
def test_k_out_of_range(r, n):
    with pytest.raises(DomainError):
        k_perm(r, n)
    with pytest.raises(DomainError):
        k_prime_perm(r, n)


def test_rank_examples():
    assert rank(identity_perm(4)) == 0
    assert unrank(0, 4) == (1, 2, 3, 4)
    assert rank(reverse_perm(4)) == 23


@pytest.mark.parametrize("n", range(1, 8))
def test_rank_matches_lexicographic_enumeration(n):
    expected = lex_ranks(n)
    for p, i in expected.items():
        assert rank(p) == i
        assert unrank(i, n) == p


def test_rank_roundtrip_random_n8():
    rng = random.Random(8)
    for _ in range(1000):
        p = tuple(rng.sample(range(1, 9), 8))
        assert unrank(rank(p), 8) == p


def test_unrank_out_of_range():
    with pytest.raises(DomainError):
        unrank(24, 4)
    with pytest.raises(DomainError):
        unrank(-1, 4)


def test_rank_fits_n20():
    assert rank(reverse_perm(20)) == math.factorial(20) - 1


@pytest.mark.parametrize("n", range(1, 8))
def test_group_identities_exhaustive(n):
    legal = [L, R, E] if n >= 2 else [L, R]
    for p in permutations(range(1, n + 1)):
        for m in legal:
            q = apply_move(p, m)
            assert sorted(q) == list(range(1, n + 1))
            assert apply_move(q, m.inverse) == p
        assert apply_sequence(p, [L] * n) == p


@given(perms(), moves)
def test_sequence_then_inverse_restores(p, seq):
    if len(p) == 1:
        seq = [m for m in seq if m is not E]
    assert apply_sequence(apply_sequence(p, seq), invert_sequence(seq)) == p


@given(perms())
def test_rank_bijective_property(p):
    r = rank(p)
    assert 0 <= r < math.factorial(len(p))
    assert unrank(r, len(p)) == p


def test_invalid_permutations():
    for bad in [(), (1, 1), (0, 1), (2, 3)]:
        with pytest.raises(InvalidPermutationError):
            validate(bad)


def test_text_formats():
    assert parse_perm("4,3,2,1") == (4, 3, 2, 1)
    assert parse_perm("(4, 3, 2, 1)") == (4, 3, 2, 1)
    assert format_perm((4, 3, 2, 1)) == "4,3,2,1"
    assert parse_moves("ELELERRE") == [E, L, E, L, E, R, R, E]
    assert format_moves([E, L, R]) == "ELR"
    with pytest.raises(InvalidMoveError):
        parse_moves("ELX")
    with pytest.raises(InvalidPermutationError):
        parse_perm("1,2,x")
