#!/usr/bin/env python3
"""
Sequences over G•
Multisets of nonzero group elements with valuations.

Copies of an element are label-distinguishable only where it matters
(factorisation counting); everywhere else a Sequence is a plain multiset.
Internally a Sequence is the sorted tuple of (linear index, multiplicity)
pairs, so equality, hashing and canonical ordering come for free.
"""

import json
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from zslab.exceptions import SequenceError
from zslab.groups.group import GroupElement, GroupSpec, order
from zslab.groups.primes import factorize
from zslab.groups.validators import validate_same_group
from zslab.sequences.weights import CROSS, WeightFunction


class Sequence:
    """Immutable multiset over G• (identity excluded)"""

    __slots__ = ("group", "_items", "_length")

    def __init__(self, group: GroupSpec, counts: Mapping[GroupElement, int] = None):
        pairs = []
        for g, m in (counts or {}).items():
            if g.group != group:
                raise SequenceError(f"Element {g} does not belong to {group}")
            pairs.append((g.index, m))
        self._init(group, pairs)

    def _init(self, group: GroupSpec, pairs: Iterable[Tuple[int, int]]) -> None:
        merged: Dict[int, int] = {}
        for idx, m in pairs:
            if not isinstance(m, int) or m < 0:
                raise SequenceError(f"Invalid multiplicity {m!r}")
            if m == 0:
                continue
            if idx == 0:
                raise SequenceError("The identity cannot occur in a sequence over G•")
            if not 0 < idx < group.order:
                raise SequenceError(f"Element index {idx} out of range for {group}")
            merged[idx] = merged.get(idx, 0) + m
        self.group = group
        self._items = tuple(sorted(merged.items()))
        self._length = sum(merged.values())

    # ==================== CONSTRUCTORS ====================

    @classmethod
    def from_pairs(cls, group: GroupSpec, pairs: Iterable[Tuple[int, int]]) -> "Sequence":
        """From (linear index, multiplicity) pairs"""
        seq = cls.__new__(cls)
        seq._init(group, pairs)
        return seq

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "Sequence":
        """From a flat list of linear indices (one entry per copy)"""
        return cls.from_pairs(group, Counter(int(i) for i in indices).items())

    @classmethod
    def from_elements(cls, group: GroupSpec, elems: Iterable[GroupElement]) -> "Sequence":
        elems = list(elems)
        for g in elems:
            if g.group != group:
                raise SequenceError(f"Element {g} does not belong to {group}")
        return cls.from_indices(group, (g.index for g in elems))

    @classmethod
    def empty(cls, group: GroupSpec) -> "Sequence":
        return cls.from_pairs(group, ())

    # ==================== ACCESSORS ====================

    @property
    def items(self) -> Tuple[Tuple[int, int], ...]:
        """(linear index, multiplicity) pairs in canonical order"""
        return self._items

    @property
    def counts(self) -> Dict[GroupElement, int]:
        """Valuation map g → v_g(S)"""
        return {self.group.from_index(i): m for i, m in self._items}

    def indices(self) -> List[int]:
        """One linear index per copy, ascending (the labeled view)"""
        return [i for i, m in self._items for _ in range(m)]

    def elements(self) -> List[GroupElement]:
        return [self.group.from_index(i) for i in self.indices()]

    def support(self) -> List[GroupElement]:
        return [self.group.from_index(i) for i, _ in self._items]

    def valuation(self, g: GroupElement) -> int:
        idx = g.index
        for i, m in self._items:
            if i == idx:
                return m
        return 0

    def canonical_key(self) -> Tuple[int, ...]:
        """Sorted index tuple; lexicographic order on these is the canonical order"""
        return tuple(self.indices())

    def __len__(self) -> int:
        return self._length

    def __bool__(self) -> bool:
        return self._length > 0

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.group == other.group and self._items == other._items

    def __hash__(self) -> int:
        return hash((self.group, self._items))

    def __mul__(self, other: "Sequence") -> "Sequence":
        return mul(self, other)

    def __repr__(self) -> str:
        if not self._items:
            return f"Sequence[{self.group}](1)"
        terms = []
        for i, m in self._items:
            g = repr(self.group.from_index(i))
            terms.append(g if m == 1 else f"{g}^{m}")
        return f"Sequence[{self.group}](" + "·".join(terms) + ")"


def _validate_same(a: Sequence, b: Sequence) -> None:
    validate_same_group(a, b)


# ==================== ALGEBRA ====================

def length(S: Sequence) -> int:
    return len(S)


def sigma(S: Sequence) -> GroupElement:
    """σ(S) = Σ v_g(S)·g; σ(1) = 0"""
    G = S.group
    total = [0] * G.rank
    for i, m in S.items:
        for j, x in enumerate(G.coords_of(i)):
            total[j] += m * x
    return G.element(x % n for x, n in zip(total, G.components))


def cross_number(S: Sequence, w: WeightFunction = CROSS) -> Fraction:
    """Σ v_g(S)·w(order(g)), exact"""
    total = Fraction(0)
    for g, m in S.counts.items():
        total += m * w(order(g))
    return total


def gcd_seq(S: Sequence, T: Sequence) -> Sequence:
    _validate_same(S, T)
    tv = dict(T.items)
    return Sequence.from_pairs(S.group, ((i, min(m, tv[i])) for i, m in S.items if i in tv))


def divides(T: Sequence, S: Sequence) -> bool:
    """T | S"""
    _validate_same(T, S)
    sv = dict(S.items)
    return all(sv.get(i, 0) >= m for i, m in T.items)


def mul(S: Sequence, T: Sequence) -> Sequence:
    _validate_same(S, T)
    return Sequence.from_pairs(S.group, S.items + T.items)


def div(S: Sequence, T: Sequence) -> Sequence:
    """S·T⁻¹"""
    if not divides(T, S):
        raise SequenceError(f"{T} does not divide {S}")
    tv = dict(T.items)
    return Sequence.from_pairs(S.group, ((i, m - tv.get(i, 0)) for i, m in S.items))


def amalgamate(S: Sequence, T: Sequence) -> Sequence:
    """Replace the subsequence T of S by the single term σ(T)"""
    if not divides(T, S):
        raise SequenceError(f"Cannot amalgamate: {T} does not divide {S}")
    s = sigma(T)
    if s.is_zero:
        raise SequenceError("Cannot amalgamate a zero-sum subsequence")
    return Sequence.from_pairs(S.group, div(S, T).items + ((s.index, 1),))


def order_histogram(S: Sequence) -> Dict[int, int]:
    """order ℓ → number of terms of order ℓ"""
    hist: Dict[int, int] = {}
    for g, m in S.counts.items():
        ell = order(g)
        hist[ell] = hist.get(ell, 0) + m
    return dict(sorted(hist.items()))


def cross_terms(S: Sequence) -> Sequence:
    """Terms whose order has more than one prime factor"""
    return Sequence.from_pairs(
        S.group,
        ((g.index, m) for g, m in S.counts.items() if len(factorize(order(g))) > 1),
    )


def restrict(S: Sequence, predicate) -> Sequence:
    """Subsequence of terms g with predicate(g)"""
    return Sequence.from_pairs(S.group, ((g.index, m) for g, m in S.counts.items() if predicate(g)))


# ==================== LITERALS ====================

def to_literal(S: Sequence) -> List[List]:
    """[[coords, multiplicity], ...] in canonical order"""
    return [[list(S.group.coords_of(i)), m] for i, m in S.items]


def from_literal(group: GroupSpec, literal) -> Sequence:
    """Inverse of to_literal; accepts a JSON string or a parsed list"""
    if isinstance(literal, str):
        try:
            literal = json.loads(literal)
        except json.JSONDecodeError as e:
            raise SequenceError(f"Invalid sequence literal: {e}") from e
    if not isinstance(literal, list):
        raise SequenceError("Sequence literal must be a list of [coords, multiplicity] pairs")

    pairs = []
    for entry in literal:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise SequenceError(f"Malformed sequence entry {entry!r}")
        coords, m = entry
        try:
            g = group.element(coords)
        except (TypeError, ValueError) as e:
            raise SequenceError(f"Malformed element {coords!r}: {e}") from e
        pairs.append((g.index, m))
    return Sequence.from_pairs(group, pairs)
