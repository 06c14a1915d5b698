#!/usr/bin/env python3
"""
Irreducible Enumeration
Every minimal zero-sum sequence up to a length, in (length, lex) order.
"""

from typing import Iterator, List

from zslab.config import DEFAULT_CAPS, Caps
from zslab.factorization.factor import is_irreducible
from zslab.groups.group import GroupSpec
from zslab.groups.validators import validate_group_cap
from zslab.sequences.sequence import Sequence
from zslab.sumsets.sumset import SumsetState


def enumerate_irreducibles(
    group: GroupSpec,
    max_len: int,
    caps: Caps = DEFAULT_CAPS,
) -> Iterator[Sequence]:
    """
    Yield each irreducible sequence of length <= max_len exactly once.

    An irreducible sequence is its largest term appended to a zero-sum free
    prefix, so for each length L the prefixes are the zero-sum free sorted
    tuples of length L − 1 and the closing term is forced to −σ(prefix).
    """
    validate_group_cap(group, caps.group_cap)
    n = group.order
    add = group.add_table
    neg = group.neg_table

    def prefixes(prefix: List[int], state: SumsetState, total: int, start: int, want: int):
        if len(prefix) == want:
            yield prefix, total
            return
        for idx in range(start, n):
            if not state.can_insert(idx):
                continue
            prefix.append(idx)
            yield from prefixes(prefix, state.insert(idx), int(add[total, idx]), idx, want)
            prefix.pop()

    for L in range(2, max_len + 1):
        for prefix, total in prefixes([], SumsetState(group), 0, 1, L - 1):
            closing = int(neg[total])
            if closing < prefix[-1]:
                continue
            candidate = Sequence.from_indices(group, prefix + [closing])
            if is_irreducible(candidate, caps):
                yield candidate
