import random

import pytest
from hypothesis import given, settings, strategies as st

from tolerant_tverberg import Point, RankError, order_key_1d, select, to_scalar


def pts(pairs):
    return [Point(pid, (to_scalar(v),)) for v, pid in pairs]


def test_middle_rank():
    S = pts([(5, 1), (1, 2), (3, 3)])
    assert select(S, 2).id == 3


def test_singleton():
    S = pts([(7, 9)])
    assert select(S, 1).id == 9


def test_ties_resolved_by_id():
    S = pts([(2, 1), (2, 2), (2, 3)])
    assert select(S, 3).id == 3


def test_rank_out_of_range():
    S = pts([(1, 1), (2, 2)])
    with pytest.raises(RankError):
        select(S, 0)
    with pytest.raises(RankError):
        select(S, 3)


def test_caller_list_not_reordered():
    S = pts([(9, 1), (2, 2), (5, 3), (1, 4)])
    snapshot = list(S)
    select(S, 2)
    assert S == snapshot


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=60))
@settings(max_examples=200)
def test_matches_sort_oracle(values):
    S = pts([(v, i) for i, v in enumerate(values)])
    expected = sorted(S, key=order_key_1d)
    for k in range(1, len(S) + 1):
        assert select(S, k) == expected[k - 1]


def test_large_random_list_against_sort():
    rng = random.Random(20240817)
    S = pts([(rng.randint(-10**6, 10**6), i) for i in range(1000)])
    expected = sorted(S, key=order_key_1d)
    for k in (1, 2, 499, 500, 501, 999, 1000):
        assert select(S, k) == expected[k - 1]


def test_exactly_k_minus_1_predecessors():
    rng = random.Random(7)
    S = pts([(rng.randint(0, 30), i) for i in range(80)])  # many duplicates
    for k in (1, 13, 40, 80):
        chosen = select(S, k)
        ck = order_key_1d(chosen)
        assert sum(1 for p in S if order_key_1d(p) < ck) == k - 1
