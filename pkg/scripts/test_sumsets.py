#!/usr/bin/env python3
"""
Sumset Tests
Bit-vector Σ(S) against a brute-force subset oracle, zero-sum freeness,
labeled subset-sum counting and zero-sum free enumeration
"""

import random
import sys
from itertools import combinations
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zslab.exceptions import CapExceededError
from zslab.groups import cyclic, elementary, parse_group
from zslab.sequences import Sequence, mul
from zslab.sumsets import (
    SumsetState,
    has_full_sumset,
    is_zero_sum,
    is_zero_sum_free,
    iter_zero_sum_free,
    random_zero_sum_free,
    subset_sum_counts,
    sumset,
)

C4 = cyclic(4)


def brute_force_sums(S):
    """Sums of all nonempty labeled subsequences"""
    G = S.group
    terms = S.elements()
    sums = []
    for r in range(1, len(terms) + 1):
        for combo in combinations(terms, r):
            total = G.zero
            for g in combo:
                total = total + g
            sums.append(total)
    return sums


@st.composite
def sequences(draw):
    G = parse_group(draw(st.sampled_from(["6", "4,2", "2,2,2", "9", "5"])))
    indices = draw(st.lists(st.integers(1, G.order - 1), max_size=7))
    return Sequence.from_indices(G, indices)


@settings(max_examples=60, deadline=None)
@given(sequences())
def test_sumset_matches_oracle(S):
    sums = brute_force_sums(S)
    assert sumset(S) == set(sums)
    assert is_zero_sum_free(S) == all(not g.is_zero for g in sums)


@settings(max_examples=40, deadline=None)
@given(sequences())
def test_subset_counts_match_oracle(S):
    counts = subset_sum_counts(S)
    tally = {}
    for g in brute_force_sums(S):
        tally[g.index] = tally.get(g.index, 0) + 1
    tally[0] = tally.get(0, 0) + 1
    for index in range(S.group.order):
        assert counts[index] == min(tally.get(index, 0), 2)


def test_small_sumsets():
    """Known Σ over C4"""
    print("\n" + "=" * 60)
    print("TEST 1: Small sumsets")
    print("=" * 60)

    S = Sequence.from_indices(C4, [1, 2])
    assert sorted(g.index for g in sumset(S)) == [1, 2, 3]
    assert is_zero_sum_free(S)
    assert has_full_sumset(S)

    T = Sequence.from_indices(C4, [1, 3])
    assert not is_zero_sum_free(T)
    assert is_zero_sum(T)
    assert sumset(Sequence.empty(C4)) == set()
    assert is_zero_sum_free(Sequence.empty(C4))
    assert not has_full_sumset(Sequence.from_indices(C4, [2]))
    print("✓ Σ((1)(2)) = {1, 2, 3} over C4")
    print("✅ Small sumsets: PASSED")


def test_state_is_a_value():
    state = SumsetState(C4)
    grown = state.insert(1)
    assert state.size == 0
    assert grown.size == 1
    assert grown.can_insert(1)
    assert not grown.can_insert(3)
    assert not grown.can_insert(0)
    assert C4.element((1,)) in grown
    assert grown.insert(1, times=3).contains_zero


def test_subset_counts_saturate():
    counts = subset_sum_counts(Sequence.from_indices(C4, [1, 1]))
    assert list(counts) == [1, 2, 1, 0]


def test_iter_zero_sum_free():
    """Every zero-sum free multiset exactly once, in lex order"""
    found = list(iter_zero_sum_free(elementary(2, 2), 3))
    assert len(found) == 6
    assert len(set(found)) == 6

    found = list(iter_zero_sum_free(cyclic(3), 5))
    assert [S.canonical_key() for S in found] == [(1,), (1, 1), (2,), (2, 2)]

    found = list(iter_zero_sum_free(parse_group("6"), 5))
    keys = [S.canonical_key() for S in found]
    assert keys == sorted(keys)
    assert all(is_zero_sum_free(S) for S in found)
    assert max(len(S) for S in found) == 5
    assert list(iter_zero_sum_free(C4, 0)) == []


def test_random_zero_sum_free():
    G = elementary(3, 2)
    first = random_zero_sum_free(G, random.Random(7), 4)
    second = random_zero_sum_free(G, random.Random(7), 4)
    assert first == second
    assert is_zero_sum_free(first)
    assert len(first) <= 4


def test_cap():
    with pytest.raises(CapExceededError):
        sumset(Sequence.from_indices(cyclic(100), [1]), cap=64)


# ==================== PROPERTIES ====================

@settings(max_examples=60, deadline=None)
@given(sequences(), st.lists(st.integers(1, 4), max_size=3))
def test_sumset_is_monotone(S, extra):
    """T | S implies Σ(T) ⊆ Σ(S)"""
    G = S.group
    R = Sequence.from_indices(G, [i % (G.order - 1) + 1 for i in extra])
    assert sumset(S) <= sumset(mul(S, R))
    assert sumset(R) <= sumset(mul(S, R))


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["6", "4,2", "2,2,2", "9", "3,3", "8", "2,4,2"]),
    st.integers(0, 2**16),
    st.integers(1, 10),
)
def test_zero_sum_free_sumset_is_large(text, seed, length):
    """|Σ(S)| ≥ |S| for zero-sum free S"""
    S = random_zero_sum_free(parse_group(text), random.Random(seed), length)
    assert is_zero_sum_free(S)
    assert len(sumset(S)) >= len(S)


def main():
    """Run all sumset tests"""
    try:
        print("=" * 60)
        print("SUMSET TESTING")
        print("=" * 60)

        test_sumset_matches_oracle()
        test_subset_counts_match_oracle()
        test_small_sumsets()
        test_state_is_a_value()
        test_subset_counts_saturate()
        test_iter_zero_sum_free()
        test_random_zero_sum_free()
        test_cap()
        test_sumset_is_monotone()
        test_zero_sum_free_sumset_is_large()

        print("\n" + "=" * 60)
        print("✅ ALL SUMSET TESTS PASSED")
        print("=" * 60)

    except AssertionError as e:
        print(f"\n❌ TEST FAILED: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
