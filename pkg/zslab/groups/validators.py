#!/usr/bin/env python3
"""
Group Validators
"""

from typing import Sequence as Seq

from zslab.exceptions import CapExceededError, GroupMismatchError, GroupParseError
from zslab.groups.primes import factorize


def validate_components(components: Seq[int]) -> None:
    """Prime-power component orders in canonical order"""
    keys = []
    for q in components:
        if not isinstance(q, int) or q < 2:
            raise GroupParseError(f"Invalid component order {q!r}: must be an integer >= 2")
        parts = factorize(q)
        if len(parts) != 1:
            raise GroupParseError(f"Component order {q} is not a prime power")
        p, a = parts[0]
        keys.append((p, -a))

    if keys != sorted(keys):
        raise GroupParseError(
            "Components must be sorted by prime ascending, exponent descending"
        )


def validate_coords(components: Seq[int], coords: Seq[int]) -> None:
    if len(coords) != len(components):
        raise GroupMismatchError(
            f"Element has {len(coords)} coordinates, group has {len(components)} components"
        )
    for x, n in zip(coords, components):
        if not 0 <= x < n:
            raise GroupMismatchError(f"Coordinate {x} out of range [0, {n})")


def validate_same_group(a, b) -> None:
    """Operands must live in the same GroupSpec"""
    if a.group != b.group:
        raise GroupMismatchError(f"Group mismatch: {a.group} vs {b.group}")


def validate_group_cap(group, cap: int) -> None:
    """Enumeration-facing cap on |G|"""
    if group.order > cap:
        raise CapExceededError("group_cap", cap, group.order)
