#!/usr/bin/env python3
"""
Wideness
p ≺ n and p ≺₂ n, and wide / 2-wide integers.

Both relations compare a function of p against the divisor-sum product
    Π_{q^α ∥ n} (q^{α+1} − 1)/(q^{α+1} − q^α)
and additionally require p ∤ n.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict

from zslab.exceptions import PreconditionError
from zslab.groups.primes import factorize, is_prime


class WideVariant(str, Enum):
    WIDE = "wide"
    TWO_WIDE = "two_wide"


@dataclass(frozen=True)
class WidenessReport:
    p: int
    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    variant: WideVariant

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "n": self.n,
            "variant": self.variant.value,
            "lhs": {"num": self.lhs.numerator, "den": self.lhs.denominator},
            "rhs": {"num": self.rhs.numerator, "den": self.rhs.denominator},
            "holds": self.holds,
        }


def divisor_product(n: int) -> Fraction:
    """Π (q^{α+1} − 1)/(q^{α+1} − q^α); 1 for n = 1"""
    value = Fraction(1)
    for q, a in factorize(n):
        value *= Fraction(q ** (a + 1) - 1, q ** (a + 1) - q ** a)
    return value


def _lhs(p: int, variant: WideVariant) -> Fraction:
    if variant == WideVariant.WIDE:
        return Fraction(p, p - 1)
    return Fraction(p * p + 2 * p - 2, p * p)


def _report(p: int, n: int, variant: WideVariant) -> WidenessReport:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    lhs = _lhs(p, variant)
    rhs = divisor_product(n)
    return WidenessReport(p, n, lhs, rhs, lhs >= rhs and n % p != 0, variant)


def is_wide(p: int, n: int) -> WidenessReport:
    """p ≺ n: p/(p−1) ≥ divisor product of n, and p ∤ n"""
    return _report(p, n, WideVariant.WIDE)


def is_2wide(p: int, n: int) -> WidenessReport:
    """p ≺₂ n: (p²+2p−2)/p² ≥ divisor product of n, and p ∤ n"""
    return _report(p, n, WideVariant.TWO_WIDE)


def _chain_holds(n: int, variant: WideVariant) -> bool:
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    parts = factorize(n)
    for i, (q, _) in enumerate(parts[:-1]):
        rest = 1
        for r, b in parts[i + 1:]:
            rest *= r ** b
        if not _report(q, rest, variant).holds:
            return False
    return True


def is_wide_integer(n: int) -> bool:
    """q_i ≺ Π_{j>i} q_j^{α_j} for every prime q_i of n but the largest"""
    return _chain_holds(n, WideVariant.WIDE)


def is_2wide_integer(n: int) -> bool:
    return _chain_holds(n, WideVariant.TWO_WIDE)
