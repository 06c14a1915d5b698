#!/usr/bin/env python3
"""
Search Objectives
Zero-sum free, irreducible and UFIS search states for the engine.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from zslab.groups.group import GroupSpec
from zslab.invariants.engine import Objective
from zslab.sequences.sequence import Sequence
from zslab.sequences.weights import WeightFunction
from zslab.sumsets.sumset import SATURATION, insert_count


def _insert(group: GroupSpec, reach: np.ndarray, index: int) -> np.ndarray:
    new = reach.copy()
    new[group.add_table[:, index][reach]] = True
    new[index] = True
    return new


# ==================== ZERO-SUM FREE ====================

class ZsfState:
    __slots__ = ("reach", "size", "value")

    def __init__(self, reach: np.ndarray, size: int, value: Fraction):
        self.reach = reach
        self.size = size
        self.value = value


class ZeroSumFreeObjective(Objective):
    """max w(S) over zero-sum free S"""

    def root(self) -> ZsfState:
        return ZsfState(np.zeros(self.group.order, dtype=bool), 0, Fraction(0))

    def extend(self, state: ZsfState, index: int) -> Optional[ZsfState]:
        if state.reach[self.group.neg_table[index]]:
            return None
        reach = _insert(self.group, state.reach, index)
        return ZsfState(reach, int(reach.sum()), state.value + self.weights[index])

    def leaf_value(self, state: ZsfState) -> Fraction:
        return state.value

    def bound(self, state: ZsfState, pos: int) -> Fraction:
        # every further term adds at least one new subsum
        room = (self.group.order - 1) - state.size
        return state.value + room * self.suffix_max[pos]

    def witness(self, state: ZsfState, chosen: Tuple[int, ...]) -> Sequence:
        return Sequence.from_indices(self.group, chosen)


# ==================== IRREDUCIBLE ====================

class IrreducibleState(ZsfState):
    __slots__ = ("total",)

    def __init__(self, reach: np.ndarray, size: int, value: Fraction, total: int):
        super().__init__(reach, size, value)
        self.total = total


class IrreducibleObjective(Objective):
    """
    max w(U) over irreducible U.

    Nodes are zero-sum free T; the candidate is T·(−σ(T)), which is
    irreducible whenever T is nonempty and zero-sum free.
    """

    def root(self) -> IrreducibleState:
        return IrreducibleState(np.zeros(self.group.order, dtype=bool), 0, Fraction(0), 0)

    def extend(self, state: IrreducibleState, index: int) -> Optional[IrreducibleState]:
        G = self.group
        if state.reach[G.neg_table[index]]:
            return None
        reach = _insert(G, state.reach, index)
        return IrreducibleState(
            reach,
            int(reach.sum()),
            state.value + self.weights[index],
            int(G.add_table[state.total, index]),
        )

    def leaf_value(self, state: IrreducibleState) -> Optional[Fraction]:
        if state.size == 0:
            return None
        return state.value + self.weights[int(self.group.neg_table[state.total])]

    def bound(self, state: IrreducibleState, pos: int) -> Fraction:
        room = (self.group.order - 1) - state.size
        return state.value + room * self.suffix_max[pos] + self.weight_max

    def witness(self, state: IrreducibleState, chosen: Tuple[int, ...]) -> Sequence:
        closing = int(self.group.neg_table[state.total])
        return Sequence.from_indices(self.group, chosen + (closing,))


# ==================== UFIS ====================

class UfisState:
    """
    S = B·R with B a UFIS (closed blocks) and R zero-sum free.

    closed is Σ(B) ∪ {0}; counts are the saturated labeled subset-sum counts
    of R (empty subsequence included).
    """

    __slots__ = ("closed", "closed_size", "rest", "counts", "total", "value", "length")

    def __init__(self, closed, closed_size, rest, counts, total, value, length):
        self.closed = closed
        self.closed_size = closed_size
        self.rest: Tuple[int, ...] = rest
        self.counts = counts
        self.total = total
        self.value = value
        self.length = length


class UfisObjective(Objective):
    """
    max w(S) over sequences S dividing a UFIS.

    A node S stands for its UFIS extension S·(−σ(S)). Appending e to B·R:
    - two subsequences of R sum to −e: S·e divides no UFIS;
    - none: R grows;
    - exactly one, W: the block W·e joins B when Σ(W·e) ∩ Σ(B) = {0}.
    Either way the new remainder R′ must satisfy Σ(B′) ∩ Σ(R′·(−σ(R′))) = {0}.
    """

    def __init__(self, group: GroupSpec, weight: WeightFunction, closed_only: bool = False):
        super().__init__(group, weight)
        self.closed_only = closed_only

    def root(self) -> UfisState:
        G = self.group
        closed = np.zeros(G.order, dtype=bool)
        closed[0] = True
        counts = np.zeros(G.order, dtype=np.uint8)
        counts[0] = 1
        return UfisState(closed, 1, (), counts, 0, Fraction(0), 0)

    # -------------------- helpers --------------------

    def _counts_of(self, rest: Tuple[int, ...]) -> List[np.ndarray]:
        """Prefix subset-sum count vectors of rest"""
        G = self.group
        counts = np.zeros(G.order, dtype=np.uint8)
        counts[0] = 1
        prefixes = [counts]
        for idx in rest:
            counts = insert_count(G, counts, idx)
            prefixes.append(counts)
        return prefixes

    def _unique_subsequence(self, rest: Tuple[int, ...], target: int) -> List[int]:
        """Positions in rest of the only labeled subsequence summing to target"""
        G = self.group
        prefixes = self._counts_of(rest)
        picked = []
        for j in range(len(rest), 0, -1):
            if prefixes[j - 1][target] == 1:
                continue
            picked.append(j - 1)
            target = int(G.add_table[target, G.neg_table[rest[j - 1]]])
        return picked

    def _closed_sumset(self, terms) -> np.ndarray:
        G = self.group
        reach = np.zeros(G.order, dtype=bool)
        for idx in terms:
            reach = _insert(G, reach, idx)
        reach[0] = True
        return reach

    def _compatible(self, closed: np.ndarray, rest: Tuple[int, ...], total: int) -> bool:
        """Σ(B) ∩ Σ(R·(−σ(R))) ⊆ {0}"""
        if not rest:
            return True
        G = self.group
        closure = self._closed_sumset(rest + (int(G.neg_table[total]),))
        return int((closure & closed).sum()) == 1

    # -------------------- hooks --------------------

    def extend(self, state: UfisState, index: int) -> Optional[UfisState]:
        G = self.group
        target = int(G.neg_table[index])
        hits = int(state.counts[target])
        if hits >= SATURATION:
            return None

        closed, closed_size = state.closed, state.closed_size
        if hits == 0:
            rest = state.rest + (index,)
            counts = insert_count(G, state.counts, index)
            total = int(G.add_table[state.total, index])
        else:
            picked = set(self._unique_subsequence(state.rest, target))
            block = [state.rest[j] for j in sorted(picked)] + [index]
            block_sums = self._closed_sumset(block)
            if int((block_sums & closed).sum()) != 1:
                return None
            closed = np.zeros(G.order, dtype=bool)
            closed[np.unique(G.add_table[np.ix_(np.flatnonzero(state.closed), np.flatnonzero(block_sums))])] = True
            closed_size = int(closed.sum())
            rest = tuple(idx for j, idx in enumerate(state.rest) if j not in picked)
            counts = self._counts_of(rest)[-1]
            total = int(G.add_table[state.total, index])

        if not self._compatible(closed, rest, total):
            return None
        return UfisState(
            closed, closed_size, rest, counts, total,
            state.value + self.weights[index], state.length + 1,
        )

    def leaf_value(self, state: UfisState) -> Optional[Fraction]:
        if not state.rest:
            return state.value
        if self.closed_only:
            return None
        return state.value + self.weights[int(self.group.neg_table[state.total])]

    def bound(self, state: UfisState, pos: int) -> Fraction:
        # blocks of length L add at least L/2 fresh elements to Σ(B) ∪ {0}
        room = 2 * (self.group.order - state.closed_size) - len(state.rest)
        if room <= 0:
            return state.value
        return state.value + (room - 1) * self.suffix_max[pos] + self.weight_max

    def witness(self, state: UfisState, chosen: Tuple[int, ...]) -> Sequence:
        if not state.rest:
            return Sequence.from_indices(self.group, chosen)
        return Sequence.from_indices(self.group, chosen + (int(self.group.neg_table[state.total]),))
