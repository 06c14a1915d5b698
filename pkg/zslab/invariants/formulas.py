#!/usr/bin/env python3
"""
Closed Forms
Conjectured values k*, K*, K₁*, their weighted forms, and the
invariant-factor lower bound for the Davenport constant.
"""

from fractions import Fraction

from zslab.groups.group import GroupSpec, invariant_factors
from zslab.groups.primes import prime_power_base
from zslab.sequences.weights import WeightFunction


def k_star(group: GroupSpec) -> Fraction:
    """k*(G) = Σ (1 − 1/q) over the prime-power components q"""
    return sum((1 - Fraction(1, q) for q in group.components), Fraction(0))


def K_star(group: GroupSpec) -> Fraction:
    """K*(G) = k*(G) + 1/exp(G); 0 for the trivial group"""
    if not group.components:
        return Fraction(0)
    return k_star(group) + Fraction(1, group.exponent)


def K1_star(group: GroupSpec) -> Fraction:
    """K₁*(G) = Σ (p^α − 1)/(p^α − p^{α−1})"""
    total = Fraction(0)
    for q in group.components:
        p, _ = prime_power_base(q)
        total += Fraction(q - 1, q - q // p)
    return total


def k_star_weighted(group: GroupSpec, weight: WeightFunction) -> Fraction:
    """Σ over components p^α of Σ_{a=1..α} (p − 1)·w(p^a)"""
    total = Fraction(0)
    for q in group.components:
        p, alpha = prime_power_base(q)
        total += sum(((p - 1) * weight(p ** a) for a in range(1, alpha + 1)), Fraction(0))
    return total


def K1_star_weighted(group: GroupSpec, weight: WeightFunction) -> Fraction:
    """Σ over components p^α of Σ_{a=1..α} p·w(p^a)"""
    total = Fraction(0)
    for q in group.components:
        p, alpha = prime_power_base(q)
        total += sum((p * weight(p ** a) for a in range(1, alpha + 1)), Fraction(0))
    return total


def davenport_lower(group: GroupSpec) -> int:
    """D*(G) = 1 + Σ (d_j − 1) over invariant factors; 0 for the trivial group"""
    factors = invariant_factors(group)
    if not factors:
        return 0
    return 1 + sum(d - 1 for d in factors)
