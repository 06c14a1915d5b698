#!/usr/bin/env python3
"""
Prime Utilities
Factorisation, P⁻/P⁺ and prime indexing for orders and exponents
"""

from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import factorint, isprime, primepi

from zslab.exceptions import PreconditionError


def is_prime(n: int) -> bool:
    """Primality test"""
    return n >= 2 and bool(isprime(n))


@lru_cache(maxsize=4096)
def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """
    Prime factorisation as ((p, α), ...) with p ascending.

    factorize(1) is the empty tuple.
    """
    if n < 1:
        raise PreconditionError(f"Cannot factorise {n}: must be >= 1")
    return tuple(sorted((int(p), int(a)) for p, a in factorint(n).items()))


def prime_power_parts(n: int) -> List[int]:
    """Prime-power parts of n, prime ascending (CRT split)"""
    return [p ** a for p, a in factorize(n)]


def prime_power_base(q: int) -> Tuple[int, int]:
    """(p, α) with q = p^α; raises when q is not a prime power"""
    parts = factorize(q)
    if len(parts) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    return parts[0]


def p_minus(n: int) -> int:
    """Least prime factor P⁻(n)"""
    if n < 2:
        raise PreconditionError(f"P-({n}) undefined: n must be >= 2")
    return factorize(n)[0][0]


def p_plus(n: int) -> int:
    """Greatest prime factor P⁺(n)"""
    if n < 2:
        raise PreconditionError(f"P+({n}) undefined: n must be >= 2")
    return factorize(n)[-1][0]


def prime_index(p: int) -> int:
    """1-based index of p among all primes (2 → 1, 3 → 2, 5 → 3, ...)"""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    return int(primepi(p))


def valuation(n: int, p: int) -> int:
    """p-adic valuation v_p(n) for n >= 1"""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
