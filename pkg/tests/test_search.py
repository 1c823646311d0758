import io
import random

import pytest

from lresort import _kernels as K
from lresort.errors import SearchAborted
from lresort.lre import lre_count
from lresort.lre1 import lre1_count
from lresort.perm import Move, apply_move, apply_sequence, identity_perm, rank, reverse_perm
from lresort.search import SearchLimits, distance_table, optimal_distance

from oracles import naive_distances

BACKENDS = ["numpy"] + (["numba"] if K.HAVE_NUMBA else [])
KNOWN = [0, 1, 2, 4, 8, 13, 19, 26, 34, 43]

INVERSE_PAIRS = {(Move.E, Move.E), (Move.L, Move.R), (Move.R, Move.L)}


def check_witness(result):
    assert len(result.witness) == result.distance
    assert apply_sequence(result.source, result.witness) == identity_perm(result.n)
    for a, b in zip(result.witness, result.witness[1:]):
        assert (a, b) not in INVERSE_PAIRS


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", range(1, 10))
def test_reverse_distances(n, backend):
    result = optimal_distance(reverse_perm(n), backend=backend)
    assert result.distance == KNOWN[n - 1]
    check_witness(result)


def test_identity_source():
    result = optimal_distance(identity_perm(6))
    assert result.distance == 0 and result.witness == []


def test_single_exchange():
    result = optimal_distance((2, 1, 3, 4))
    assert result.distance == 1 and result.witness == [Move.E]


@pytest.mark.parametrize("n", range(2, 8))
def test_pruned_matches_unpruned_oracle(n):
    oracle = naive_distances(n)
    rng = random.Random(n)
    states = list(oracle)
    for p in rng.sample(states, min(100, len(states))):
        result = optimal_distance(p)
        assert result.distance == oracle[p]
        check_witness(result)
        assert optimal_distance(p, prune=False).distance == oracle[p]


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", range(1, 8))
def test_distance_table_matches_oracle(n, backend):
    oracle = naive_distances(n)
    table = distance_table(n, backend=backend)
    assert len(table) == len(oracle)
    for p, d in oracle.items():
        assert table[rank(p)] == d


def test_distance_table_examples():
    t3 = distance_table(3)
    assert t3[rank((3, 2, 1))] == 2
    assert t3.max() >= 2
    assert distance_table(4)[rank((4, 3, 2, 1))] == 4
    for n in range(1, 8):
        assert distance_table(n)[0] == 0


@pytest.mark.parametrize("n", range(2, 8))
def test_symmetry_against_per_source_search(n):
    table = distance_table(n)
    rng = random.Random(100 + n)
    for _ in range(20):
        p = tuple(rng.sample(range(1, n + 1), n))
        assert optimal_distance(p).distance == table[rank(p)]


@pytest.mark.parametrize("n", range(2, 8))
def test_triangle_inequality(n):
    table = distance_table(n)
    for p in naive_distances(n):
        for m in (Move.L, Move.R, Move.E):
            assert abs(int(table[rank(p)]) - int(table[rank(apply_move(p, m))])) <= 1


def test_deterministic_and_backend_independent():
    src = reverse_perm(8)
    runs = [optimal_distance(src, backend=b) for b in BACKENDS for _ in range(2)]
    assert len({tuple(r.witness) for r in runs}) == 1
    assert len({r.stats.states_expanded for r in runs}) == 1


def test_dominance_small():
    for n in range(3, 10):
        assert optimal_distance(reverse_perm(n)).distance <= lre1_count(n) <= lre_count(n)


def test_depth_limit_aborts():
    with pytest.raises(SearchAborted) as info:
        optimal_distance(reverse_perm(7), SearchLimits(max_depth=10))
    assert info.value.completed_depth == 10


def test_state_limit_aborts():
    with pytest.raises(SearchAborted) as info:
        optimal_distance(reverse_perm(7), SearchLimits(max_states=50))
    assert info.value.states_expanded <= 50
    assert 0 < info.value.completed_depth < 19


def test_memory_hint_aborts():
    with pytest.raises(SearchAborted):
        optimal_distance(reverse_perm(9), SearchLimits(max_memory_hint=1000))


def test_limits_must_be_positive():
    with pytest.raises(ValueError):
        SearchLimits(max_depth=0)


def test_default_bound_is_sound_for_reverse():
    # the default depth bound equals lre1_count(n); it must not cut off the answer
    assert optimal_distance(reverse_perm(7)).distance == 19


def test_progress_lines():
    buf = io.StringIO()
    optimal_distance(reverse_perm(5), progress=buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 8
    assert lines[0].startswith("level 1 frontier")
