#!/usr/bin/env python3
"""
Sequence Algebra Tests
Multisets over G•, cross numbers and weight functions
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zslab.exceptions import GroupMismatchError, SequenceError, WeightError
from zslab.groups import cyclic, parse_group
from zslab.sequences import (
    CROSS,
    DYADIC,
    LENGTH,
    Sequence,
    WeightFunction,
    amalgamate,
    cross_number,
    cross_terms,
    div,
    divides,
    from_literal,
    gcd_seq,
    mul,
    order_histogram,
    parse_weight,
    restrict,
    sigma,
    to_literal,
)

C6 = parse_group("6")          # C2 ⊕ C3
C4 = cyclic(4)


def seq(group, *coords):
    return Sequence.from_elements(group, [group.element(c) for c in coords])


def test_construction():
    """Multiplicities, canonical order, identity rejected"""
    print("\n" + "=" * 60)
    print("TEST 1: Construction")
    print("=" * 60)

    S = Sequence.from_indices(C4, [3, 1, 1])
    assert len(S) == 3
    assert S.items == ((1, 2), (3, 1))
    assert S.indices() == [1, 1, 3]
    assert S.valuation(C4.element((1,))) == 2
    assert S.valuation(C4.element((2,))) == 0
    assert S == Sequence.from_pairs(C4, [(3, 1), (1, 2)])
    assert not Sequence.empty(C4)
    assert len(Sequence.empty(C4)) == 0

    with pytest.raises(SequenceError):
        Sequence.from_indices(C4, [0])
    with pytest.raises(SequenceError):
        Sequence.from_indices(C4, [4])
    with pytest.raises(SequenceError):
        Sequence.from_pairs(C4, [(1, -1)])
    print(f"✓ {S}")
    print("✅ Construction: PASSED")


def test_sigma_and_cross_number():
    S = seq(C6, (1, 0), (0, 1), (0, 1))
    assert sigma(S) == C6.element((1, 2))
    assert cross_number(S) == Fraction(7, 6)
    assert cross_number(S, LENGTH) == 3
    assert sigma(Sequence.empty(C6)).is_zero
    assert cross_number(Sequence.empty(C6)) == 0
    print("✓ (1,0)(0,1)² over C2⊕C3: σ = (1,2), k = 7/6")


def test_weights():
    """Cross, length, dyadic and custom weights"""
    assert CROSS(6) == Fraction(1, 6)
    assert LENGTH(6) == 1
    assert DYADIC(2) == Fraction(1, 2)
    assert DYADIC(3) == Fraction(1, 4)
    assert DYADIC(4) == Fraction(1, 4)
    assert DYADIC(6) == Fraction(1, 8)
    assert DYADIC(5) == Fraction(1, 8)
    assert parse_weight("dyadic") == DYADIC

    custom = WeightFunction.custom({2: Fraction(1, 3)})
    assert custom(2) == Fraction(1, 3)
    with pytest.raises(WeightError):
        custom(3)
    with pytest.raises(WeightError):
        parse_weight("bogus")
    with pytest.raises(WeightError):
        WeightFunction("bogus")

    S = seq(C6, (1, 0), (0, 1), (0, 1))
    assert cross_number(S, DYADIC) == Fraction(1, 2) + 2 * Fraction(1, 4)


def test_divisibility_algebra():
    S = Sequence.from_indices(C4, [1, 1, 2])
    T = Sequence.from_indices(C4, [1, 2])
    U = Sequence.from_indices(C4, [1, 3])

    assert divides(T, S)
    assert not divides(U, S)
    assert div(S, T) == Sequence.from_indices(C4, [1])
    assert mul(T, U) == Sequence.from_indices(C4, [1, 1, 2, 3])
    assert T * U == mul(T, U)
    assert gcd_seq(S, U) == Sequence.from_indices(C4, [1])
    assert divides(Sequence.empty(C4), S)

    with pytest.raises(SequenceError):
        div(S, U)
    with pytest.raises(GroupMismatchError):
        mul(S, Sequence.from_indices(cyclic(8), [1]))


def test_amalgamate():
    """Replace T | S by the single term σ(T)"""
    S = Sequence.from_indices(C4, [1, 1, 2])
    assert amalgamate(S, Sequence.from_indices(C4, [1, 2])) == Sequence.from_indices(C4, [1, 3])

    with pytest.raises(SequenceError):
        amalgamate(Sequence.from_indices(C4, [1, 3]), Sequence.from_indices(C4, [1, 3]))
    with pytest.raises(SequenceError):
        amalgamate(S, Sequence.from_indices(C4, [3]))


def test_order_views():
    S = seq(C6, (1, 0), (0, 1), (0, 1), (1, 1))
    assert order_histogram(S) == {2: 1, 3: 2, 6: 1}
    assert cross_terms(S) == seq(C6, (1, 1))
    assert restrict(S, lambda g: g.coords[0] == 0) == seq(C6, (0, 1), (0, 1))


def test_literals():
    G = parse_group("4,2")
    S = from_literal(G, "[[[1,0],2],[[0,1],1]]")
    assert len(S) == 3
    assert to_literal(S) == [[[0, 1], 1], [[1, 0], 2]]
    assert from_literal(G, to_literal(S)) == S

    for bad in ["[[[1,0]]]", "{}", "not json", "[[[9,0],1]]"]:
        with pytest.raises(SequenceError):
            from_literal(G, bad)


# ==================== PROPERTIES ====================

PROPERTY_GROUPS = ["6", "4,2", "2,2,2", "9", "5", "12"]


@st.composite
def sequence_triples(draw, max_size=6):
    G = parse_group(draw(st.sampled_from(PROPERTY_GROUPS)))
    terms = st.lists(st.integers(1, G.order - 1), max_size=max_size)
    return tuple(Sequence.from_indices(G, draw(terms)) for _ in range(3))


@settings(max_examples=60, deadline=None)
@given(sequence_triples())
def test_cross_number_is_additive(triple):
    S, T, _ = triple
    for w in (CROSS, DYADIC, LENGTH):
        assert cross_number(mul(S, T), w) == cross_number(S, w) + cross_number(T, w)
    assert cross_number(S, LENGTH) == len(S)


@settings(max_examples=60, deadline=None)
@given(sequence_triples())
def test_divides_is_a_partial_order(triple):
    S, T, R = triple
    assert divides(S, S)
    if divides(S, T) and divides(T, S):
        assert S == T

    g = gcd_seq(S, T)
    ST = mul(S, T)
    assert divides(g, S) and divides(g, T)
    assert divides(S, ST)
    assert divides(g, ST)
    assert divides(S, mul(ST, R))
    assert div(ST, T) == S


@settings(max_examples=60, deadline=None)
@given(sequence_triples())
def test_amalgamate_keeps_sigma(triple):
    S, T, _ = triple
    U = gcd_seq(S, T)
    if len(U) == 0 or sigma(U).is_zero:
        return
    A = amalgamate(S, U)
    assert sigma(A) == sigma(S)
    assert len(A) == len(S) - len(U) + 1
    assert len(A) <= len(S)


def main():
    """Run all sequence tests"""
    try:
        print("=" * 60)
        print("SEQUENCE TESTING")
        print("=" * 60)

        test_construction()
        test_sigma_and_cross_number()
        test_weights()
        test_divisibility_algebra()
        test_amalgamate()
        test_order_views()
        test_literals()
        test_cross_number_is_additive()
        test_divides_is_a_partial_order()
        test_amalgamate_keeps_sigma()

        print("\n" + "=" * 60)
        print("✅ ALL SEQUENCE TESTS PASSED")
        print("=" * 60)

    except AssertionError as e:
        print(f"\n❌ TEST FAILED: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
