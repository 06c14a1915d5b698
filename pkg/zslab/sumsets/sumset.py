#!/usr/bin/env python3
"""
Sumsets
Subset-sum machinery over a bit vector indexed by linear element index.

Σ(S) follows the nonempty-subsequence convention: 0 ∈ Σ(S) exactly when
S has a nonempty zero-sum subsequence.
"""

import random
from typing import Iterator, List, Optional, Set

import numpy as np

from zslab.constants import DEFAULT_GROUP_CAP
from zslab.groups.group import GroupElement, GroupSpec
from zslab.groups.validators import validate_group_cap
from zslab.sequences.sequence import Sequence, sigma

SATURATION = 2


class SumsetState:
    """
    Incremental Σ of the terms inserted so far.

    Instances are values: insert() returns a new state and leaves the
    receiver untouched, so search code can keep snapshots on its stack.
    """

    __slots__ = ("group", "reach")

    def __init__(self, group: GroupSpec, reach: Optional[np.ndarray] = None):
        self.group = group
        self.reach = np.zeros(group.order, dtype=bool) if reach is None else reach

    @classmethod
    def of(cls, S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> "SumsetState":
        validate_group_cap(S.group, cap)
        state = cls(S.group)
        for i, m in S.items:
            state = state.insert(i, m)
        return state

    def insert(self, index: int, times: int = 1) -> "SumsetState":
        """Σ after appending `times` copies of the element with this index"""
        reach = self.reach.copy()
        column = self.group.add_table[:, index]
        for _ in range(times):
            reach[column[reach]] = True
            reach[index] = True
        return SumsetState(self.group, reach)

    def can_insert(self, index: int) -> bool:
        """True when appending the element keeps the sequence zero-sum free"""
        return index != 0 and not self.reach[self.group.neg_table[index]]

    @property
    def contains_zero(self) -> bool:
        return bool(self.reach[0])

    @property
    def size(self) -> int:
        return int(self.reach.sum())

    def members(self) -> List[GroupElement]:
        return [self.group.from_index(int(i)) for i in np.flatnonzero(self.reach)]

    def __contains__(self, g: GroupElement) -> bool:
        return bool(self.reach[g.index])


def sumset_mask(S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> np.ndarray:
    """Σ(S) as a boolean vector over linear indices"""
    return SumsetState.of(S, cap).reach


def sumset(S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> Set[GroupElement]:
    """{ σ(T) : T | S, T nonempty }"""
    return set(SumsetState.of(S, cap).members())


def is_zero_sum_free(S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> bool:
    return not SumsetState.of(S, cap).contains_zero


def has_full_sumset(S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> bool:
    """Σ(S) ∪ {0} = G"""
    reach = SumsetState.of(S, cap).reach
    return bool(reach[1:].all())


def is_zero_sum(S: Sequence) -> bool:
    """σ(S) = 0 (true for the empty sequence)"""
    return sigma(S).is_zero


def subset_sum_counts(S: Sequence, cap: int = DEFAULT_GROUP_CAP) -> np.ndarray:
    """
    For every y, the number of labeled subsequences of S (the empty one
    included) with sum y, saturated at 2.
    """
    validate_group_cap(S.group, cap)
    counts = np.zeros(S.group.order, dtype=np.uint8)
    counts[0] = 1
    for i in S.indices():
        counts = insert_count(S.group, counts, i)
    return counts


def insert_count(group: GroupSpec, counts: np.ndarray, index: int) -> np.ndarray:
    """Saturated subset-sum counts after appending one copy of an element"""
    shifted = counts[group.add_table[:, group.neg_table[index]]]
    return np.minimum(counts + shifted, SATURATION).astype(np.uint8)


# ==================== ZERO-SUM FREE ENUMERATION ====================

def iter_zero_sum_free(
    group: GroupSpec,
    max_len: int,
    cap: int = DEFAULT_GROUP_CAP,
) -> Iterator[Sequence]:
    """
    Every nonempty zero-sum free sequence of length <= max_len, exactly once,
    in lexicographic order of the sorted index tuple.
    """
    validate_group_cap(group, cap)
    n = group.order

    def extend(prefix: List[int], state: SumsetState, start: int):
        for idx in range(start, n):
            if not state.can_insert(idx):
                continue
            prefix.append(idx)
            yield Sequence.from_indices(group, prefix)
            if len(prefix) < max_len:
                yield from extend(prefix, state.insert(idx), idx)
            prefix.pop()

    if max_len >= 1:
        yield from extend([], SumsetState(group), 1)


def random_zero_sum_free(
    group: GroupSpec,
    rng: random.Random,
    length: int,
    cap: int = DEFAULT_GROUP_CAP,
) -> Sequence:
    """
    A random zero-sum free sequence built term by term; shorter than
    `length` when no admissible term is left.
    """
    validate_group_cap(group, cap)
    state = SumsetState(group)
    chosen: List[int] = []
    while len(chosen) < length:
        candidates = [i for i in range(1, group.order) if state.can_insert(i)]
        if not candidates:
            break
        idx = rng.choice(candidates)
        chosen.append(idx)
        state = state.insert(idx)
    return Sequence.from_indices(group, chosen)
