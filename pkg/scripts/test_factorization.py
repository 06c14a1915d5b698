#!/usr/bin/env python3
"""
Factorisation Tests
Irreducibility, labeled factorisation counting against set partitions,
the gcd criterion, composition and optimal factors
"""

import sys
from functools import lru_cache
from itertools import combinations_with_replacement
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zslab.config import Caps
from zslab.exceptions import CapExceededError, PreconditionError
from zslab.factorization import (
    compose_is_ufis,
    count_factorizations,
    divides_ufis,
    enumerate_irreducibles,
    extend_to_ufis,
    irreducible_divisors,
    is_irreducible,
    is_optimal_factor,
    is_ufis,
)
from zslab.groups import cyclic, parse_group
from zslab.sequences import Sequence, mul, sigma

C4 = cyclic(4)


def s(*indices, group=C4):
    return Sequence.from_indices(group, indices)


def partition_count(S):
    """Labeled irreducible factorisations by explicit set partitions"""
    labels = S.indices()

    def count(remaining):
        if not remaining:
            return 1
        first, rest = remaining[0], remaining[1:]
        total = 0
        for mask in range(1 << len(rest)):
            block = [first] + [rest[j] for j in range(len(rest)) if mask >> j & 1]
            if is_irreducible(Sequence.from_indices(S.group, block)):
                left = [rest[j] for j in range(len(rest)) if not mask >> j & 1]
                total += count(left)
        return total

    return count(labels) if sigma(S).is_zero else 0


@st.composite
def small_sequences(draw, max_size=6):
    G = parse_group(draw(st.sampled_from(["4", "6", "2,2", "4,2", "3,3"])))
    indices = draw(st.lists(st.integers(1, G.order - 1), max_size=max_size))
    return Sequence.from_indices(G, indices)


def test_irreducible():
    """Minimal zero-sum sequences over C4"""
    print("\n" + "=" * 60)
    print("TEST 1: Irreducibility")
    print("=" * 60)

    assert is_irreducible(s(1, 3))
    assert is_irreducible(s(2, 2))
    assert is_irreducible(s(1, 1, 2))
    assert is_irreducible(s(1, 1, 1, 1))
    assert not is_irreducible(s(1, 3, 2, 2))
    assert not is_irreducible(s(1, 2))
    assert not is_irreducible(Sequence.empty(C4))
    print("✓ (1)(3), (2)², (1)²(2), (1)⁴ irreducible; (1)(3)(2)² not")
    print("✅ Irreducibility: PASSED")


def test_count_factorizations():
    """Labeled counting: copies of one element are distinct"""
    result = count_factorizations(s(1, 3, 2, 2))
    assert result.count == 1
    assert sorted(len(b) for b in result.witness) == [2, 2]
    assert count_factorizations(s(1, 1, 3, 3)).count == 2
    assert count_factorizations(s(2, 2, 2, 2)).count == 3
    assert count_factorizations(s(1, 2)).count == 0
    assert count_factorizations(s(1, 2)).witness is None
    assert count_factorizations(Sequence.empty(C4)).count == 1

    assert is_ufis(s(1, 3, 2, 2))
    assert is_ufis(Sequence.empty(C4))
    assert not is_ufis(s(1, 1, 3, 3))
    assert not is_ufis(s(1, 2))


@settings(max_examples=40, deadline=None)
@given(small_sequences())
def test_count_matches_set_partitions(S):
    assert count_factorizations(S).count == partition_count(S)


def test_oracle_cap():
    caps = Caps(group_cap=64, oracle_len_cap=4)
    with pytest.raises(CapExceededError) as info:
        count_factorizations(s(1, 1, 1, 1, 2, 2), caps)
    assert info.value.cap_name == "oracle_len_cap"


def test_gcd_criterion():
    """divides_ufis and the −σ extension"""
    print("\n" + "=" * 60)
    print("TEST: Dividing a UFIS")
    print("=" * 60)

    assert divides_ufis(s(1, 1))
    assert extend_to_ufis(s(1, 1)) == s(1, 1, 2)
    assert is_ufis(extend_to_ufis(s(1, 1)))
    assert extend_to_ufis(s(1, 3)) == s(1, 3)

    assert not divides_ufis(s(1, 1, 3))
    with pytest.raises(PreconditionError):
        extend_to_ufis(s(1, 1, 3))

    assert irreducible_divisors(s(1, 1, 3)) == [s(1, 3)]
    print("✓ (1)² extends to the UFIS (1)²(2); (1)²(3) divides no UFIS")
    print("✅ Dividing a UFIS: PASSED")


def _extension(S):
    g = sigma(S)
    return S if g.is_zero else mul(S, Sequence.from_elements(S.group, [-g]))


@settings(max_examples=60, deadline=None)
@given(small_sequences(max_size=5))
def test_criterion_matches_extension_oracle(S):
    assert divides_ufis(S) == is_ufis(_extension(S))


def test_compose():
    assert compose_is_ufis(s(1, 3), s(2, 2))
    assert not compose_is_ufis(s(1, 3), s(1, 3))
    assert compose_is_ufis(s(1, 3), Sequence.empty(C4))

    with pytest.raises(PreconditionError):
        compose_is_ufis(s(1, 3, 2, 2), s(2, 2))
    with pytest.raises(PreconditionError):
        compose_is_ufis(s(1, 3), s(1, 1, 3, 3))


@settings(max_examples=40, deadline=None)
@given(small_sequences(max_size=4), small_sequences(max_size=4))
def test_compose_matches_counting(A, B):
    if A.group != B.group or not is_irreducible(A) or not is_ufis(B):
        return
    assert compose_is_ufis(A, B) == is_ufis(mul(A, B))


def test_optimal_factor():
    S = s(1, 3, 2, 2)
    assert is_optimal_factor(s(2, 2), S)
    assert is_optimal_factor(s(1, 3), S)
    # nothing else in the sequence: (1)²(2) is a longer replacement
    assert not is_optimal_factor(s(1, 3), s(1, 3))

    with pytest.raises(PreconditionError):
        is_optimal_factor(s(1, 1, 2), S)
    with pytest.raises(PreconditionError):
        is_optimal_factor(s(1, 3), s(1, 1, 3, 3))


@pytest.mark.parametrize("text,max_len", [("4", 4), ("6", 5), ("2,2", 3), ("3,3", 4)])
def test_enumerate_irreducibles(text, max_len):
    """Every irreducible up to a length, once, against brute force"""
    G = parse_group(text)
    found = list(enumerate_irreducibles(G, max_len))
    assert len(found) == len(set(found))

    expected = set()
    for L in range(1, max_len + 1):
        for combo in combinations_with_replacement(range(1, G.order), L):
            S = Sequence.from_indices(G, combo)
            if is_irreducible(S):
                expected.add(S)
    assert set(found) == expected


def test_irreducibles_of_c4():
    found = list(enumerate_irreducibles(C4, 4))
    assert [S.canonical_key() for S in found] == [
        (1, 3), (2, 2), (1, 1, 2), (2, 3, 3), (1, 1, 1, 1), (3, 3, 3, 3),
    ]


# ==================== PROPERTIES ====================

IRREDUCIBLE_GROUPS = ["4", "6", "2,2", "4,2", "3,3"]


@lru_cache(maxsize=None)
def _irreducibles(text):
    G = parse_group(text)
    return tuple(enumerate_irreducibles(G, G.order))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(IRREDUCIBLE_GROUPS), st.data())
def test_irreducible_has_one_factorization(text, data):
    U = data.draw(st.sampled_from(_irreducibles(text)))
    assert count_factorizations(U).count == 1
    assert is_ufis(U)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(IRREDUCIBLE_GROUPS), st.data())
def test_divisors_of_ufis_divide_ufis(text, data):
    """is_ufis(S) implies divides_ufis(T) for every T | S"""
    pool = _irreducibles(text)
    blocks = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=2))
    S = blocks[0] if len(blocks) == 1 else mul(*blocks)
    if not is_ufis(S):
        return

    assert divides_ufis(S)
    for _ in range(4):
        mults = [data.draw(st.integers(0, m)) for _, m in S.items]
        T = Sequence.from_pairs(S.group, ((i, k) for (i, _), k in zip(S.items, mults)))
        assert divides_ufis(T)


def main():
    """Run all factorisation tests"""
    try:
        print("=" * 60)
        print("FACTORISATION TESTING")
        print("=" * 60)

        test_irreducible()
        test_count_factorizations()
        test_count_matches_set_partitions()
        test_oracle_cap()
        test_gcd_criterion()
        test_criterion_matches_extension_oracle()
        test_compose()
        test_compose_matches_counting()
        test_optimal_factor()
        for text, max_len in [("4", 4), ("6", 5), ("2,2", 3), ("3,3", 4)]:
            test_enumerate_irreducibles(text, max_len)
        test_irreducibles_of_c4()
        test_irreducible_has_one_factorization()
        test_divisors_of_ufis_divide_ufis()

        print("\n" + "=" * 60)
        print("✅ ALL FACTORISATION TESTS PASSED")
        print("=" * 60)

    except AssertionError as e:
        print(f"\n❌ TEST FAILED: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
