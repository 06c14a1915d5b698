#!/usr/bin/env python3
"""
Factorisation
Irreducibility, labeled factorisation counting, UFIS tests, the gcd
criterion for dividing a UFIS, UFIS composition and optimal factors.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional

import numpy as np

from zslab.config import DEFAULT_CAPS, Caps
from zslab.exceptions import CapExceededError, PreconditionError
from zslab.groups.validators import validate_group_cap, validate_same_group
from zslab.observability.logger import get_logger
from zslab.sequences.sequence import Sequence, div, divides, sigma, to_literal
from zslab.sumsets.sumset import SumsetState, is_zero_sum, sumset_mask

logger = get_logger(__name__)


@dataclass
class FactorizationCount:
    """Number of labeled irreducible factorisations, with one witness"""
    count: int
    witness: Optional[List[Sequence]] = field(default=None)

    def to_dict(self) -> Dict:
        return {
            "count": self.count,
            "witness": [to_literal(b) for b in self.witness] if self.witness is not None else None,
        }


# ==================== IRREDUCIBILITY ====================

def is_irreducible(S: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """Nonempty, zero-sum, and no nonempty proper zero-sum subsequence"""
    validate_group_cap(S.group, caps.group_cap)
    if not S or not is_zero_sum(S):
        return False
    for i, m in S.items:
        rest = Sequence.from_pairs(S.group, [(j, c - (1 if j == i else 0)) for j, c in S.items])
        if SumsetState.of(rest, caps.group_cap).contains_zero:
            return False
    return True


# ==================== LABELED COUNTING ====================

class _LabeledTables:
    """
    Per-subset tables over the labeled copies of S (bitmask addressing):
    subset sums, whether a subset has a nonempty zero-sum subset, and the
    irreducible subsets grouped by their lowest label.
    """

    def __init__(self, S: Sequence):
        G = S.group
        self.labels = S.indices()
        n = len(self.labels)
        full = 1 << n
        add = G.add_table

        sums = np.zeros(full, dtype=np.int64)
        has_zero = np.zeros(full, dtype=bool)
        irreducible_by_low: Dict[int, List[int]] = {1 << b: [] for b in range(n)}

        for mask in range(1, full):
            low = mask & -mask
            sums[mask] = add[sums[mask ^ low], self.labels[low.bit_length() - 1]]

            proper_zero = False
            rest = mask
            while rest:
                bit = rest & -rest
                if has_zero[mask ^ bit]:
                    proper_zero = True
                    break
                rest ^= bit

            has_zero[mask] = proper_zero or sums[mask] == 0
            if sums[mask] == 0 and not proper_zero:
                irreducible_by_low[low].append(mask)

        self.full = full - 1
        self.irreducible_by_low = irreducible_by_low
        self._memo: Dict[int, int] = {0: 1}

    def count(self, mask: int) -> int:
        """Labeled partitions of `mask` into irreducible blocks"""
        cached = self._memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        total = 0
        for block in self.irreducible_by_low[low]:
            if block & ~mask == 0:
                total += self.count(mask ^ block)
        self._memo[mask] = total
        return total

    def first_partition(self, mask: int) -> Optional[List[int]]:
        if mask == 0:
            return []
        low = mask & -mask
        for block in self.irreducible_by_low[low]:
            if block & ~mask == 0 and self.count(mask ^ block):
                return [block] + self.first_partition(mask ^ block)
        return None

    def block_sequence(self, group, block: int) -> Sequence:
        return Sequence.from_indices(
            group, (lab for b, lab in enumerate(self.labels) if block >> b & 1)
        )


def _validate_oracle_cap(S: Sequence, caps: Caps) -> None:
    validate_group_cap(S.group, caps.group_cap)
    if len(S) > caps.oracle_len_cap:
        raise CapExceededError("oracle_len_cap", caps.oracle_len_cap, len(S))


def count_factorizations(S: Sequence, caps: Caps = DEFAULT_CAPS) -> FactorizationCount:
    """
    |π⁻¹(S)|: partitions of the labeled copies of S into irreducible blocks.

    Each block is anchored on the lowest unused label so every labeled
    partition is generated exactly once. Zero if σ(S) ≠ 0; one (the empty
    factorisation) for the empty sequence.
    """
    _validate_oracle_cap(S, caps)
    if not is_zero_sum(S):
        return FactorizationCount(0)
    if not S:
        return FactorizationCount(1, [])

    tables = _LabeledTables(S)
    count = tables.count(tables.full)
    witness = None
    if count:
        witness = [tables.block_sequence(S.group, b) for b in tables.first_partition(tables.full)]
    return FactorizationCount(count, witness)


def is_ufis(S: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """Zero-sum with exactly one labeled irreducible factorisation"""
    return count_factorizations(S, caps).count == 1


# ==================== GCD CRITERION ====================

def _sub_multisets(S: Sequence):
    idx = [i for i, _ in S.items]
    for mults in product(*(range(m + 1) for _, m in S.items)):
        if any(mults):
            yield Sequence.from_pairs(S.group, zip(idx, mults))


def irreducible_divisors(S: Sequence, caps: Caps = DEFAULT_CAPS) -> List[Sequence]:
    """Distinct irreducible sub-multisets of S"""
    return [U for U in _sub_multisets(S) if is_irreducible(U, caps)]


def divides_ufis(S: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    True iff S divides some UFIS: any two zero-sum labeled subsequences have
    a zero-sum gcd.

    Over irreducible labeled subsequences the criterion says two of them are
    disjoint or equal. On multisets that becomes: every irreducible U | S
    takes all copies of each element it uses, and distinct irreducible
    divisors have disjoint supports.
    """
    validate_group_cap(S.group, caps.group_cap)
    valuations = dict(S.items)
    seen_support: Dict[int, Sequence] = {}

    for U in irreducible_divisors(S, caps):
        for i, m in U.items:
            if m != valuations[i]:
                return False
            if i in seen_support:
                return False
            seen_support[i] = U
    return True


def extend_to_ufis(S: Sequence, caps: Caps = DEFAULT_CAPS) -> Sequence:
    """S if σ(S) = 0, else S·(−σ(S))"""
    if not divides_ufis(S, caps):
        raise PreconditionError(f"{S} does not divide any UFIS")
    s = sigma(S)
    if s.is_zero:
        return S
    return Sequence.from_pairs(S.group, S.items + (((-s).index, 1),))


# ==================== COMPOSITION AND OPTIMALITY ====================

def _zero_closed_sumset(S: Sequence, caps: Caps) -> np.ndarray:
    reach = sumset_mask(S, caps.group_cap).copy()
    reach[0] = True
    return reach


def _require_ufis(S: Sequence, caps: Caps, what: str) -> None:
    # a zero-sum sequence divides a UFIS iff it is one
    if not is_zero_sum(S) or not divides_ufis(S, caps):
        raise PreconditionError(f"{what} must be a UFIS, got {S}")


def compose_is_ufis(U: Sequence, S2: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """U·S2 is a UFIS iff Σ(U) ∩ Σ(S2) = {0}"""
    validate_same_group(U, S2)
    if not is_irreducible(U, caps):
        raise PreconditionError(f"{U} is not irreducible")
    _require_ufis(S2, caps, "S2")

    common = _zero_closed_sumset(U, caps) & _zero_closed_sumset(S2, caps)
    return int(common.sum()) == 1


def is_optimal_factor(U: Sequence, S: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    True iff no longer irreducible U′ keeps (S·U⁻¹)·U′ a UFIS.

    Every irreducible U′ of length L is T·(−σ(T)) with T zero-sum free of
    length L − 1, so the search runs over zero-sum free T whose terms and
    subsums avoid Σ(S·U⁻¹) \\ {0}.
    """
    validate_same_group(U, S)
    if not divides(U, S):
        raise PreconditionError(f"{U} does not divide {S}")
    if not is_irreducible(U, caps):
        raise PreconditionError(f"{U} is not irreducible")
    _require_ufis(S, caps, "S")

    G = S.group
    rest = div(S, U)
    forbidden = sumset_mask(rest, caps.group_cap).copy()
    forbidden[0] = False
    allowed = [i for i in range(1, G.order) if not forbidden[i]]
    target = len(U)
    neg = G.neg_table

    def search(start: int, state: SumsetState, size: int, total: int) -> bool:
        if size >= target:
            closing = int(neg[total])
            if not forbidden[closing]:
                closed = state.insert(closing).reach
                if not (closed & forbidden).any():
                    logger.debug("longer_factor_found", length=size + 1, replaced_length=target)
                    return True
        for pos in range(start, len(allowed)):
            idx = allowed[pos]
            if not state.can_insert(idx):
                continue
            nxt = state.insert(idx)
            if (nxt.reach & forbidden).any():
                continue
            if search(pos, nxt, size + 1, int(G.add_table[total, idx])):
                return True
        return False

    return not search(0, SumsetState(G), 0, 0)
