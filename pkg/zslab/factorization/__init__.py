#!/usr/bin/env python3
"""
Factorization Module
Irreducibles, labeled factorisation counts and UFIS criteria
"""

from zslab.factorization.factor import (
    FactorizationCount,
    compose_is_ufis,
    count_factorizations,
    divides_ufis,
    extend_to_ufis,
    irreducible_divisors,
    is_irreducible,
    is_optimal_factor,
    is_ufis,
)
from zslab.factorization.irreducibles import enumerate_irreducibles

__all__ = [
    "FactorizationCount",
    "compose_is_ufis",
    "count_factorizations",
    "divides_ufis",
    "enumerate_irreducibles",
    "extend_to_ufis",
    "irreducible_divisors",
    "is_irreducible",
    "is_optimal_factor",
    "is_ufis",
]
