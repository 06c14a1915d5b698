#!/usr/bin/env python3
"""
Invariants Module
Exact solvers, closed forms and wideness predicates
"""

from zslab.invariants.formulas import (
    K1_star,
    K1_star_weighted,
    K_star,
    davenport_lower,
    k_star,
    k_star_weighted,
)
from zslab.invariants.solvers import (
    DenseKind,
    ObjectiveKind,
    SolveResult,
    dense_all,
    dense_witness,
    solve_big_K,
    solve_davenport,
    solve_K1,
    solve_little_k,
    solve_narkiewicz,
)
from zslab.invariants.wideness import (
    WideVariant,
    WidenessReport,
    is_2wide,
    is_2wide_integer,
    is_wide,
    is_wide_integer,
)

__all__ = [
    "DenseKind",
    "K1_star",
    "K1_star_weighted",
    "K_star",
    "ObjectiveKind",
    "SolveResult",
    "WideVariant",
    "WidenessReport",
    "davenport_lower",
    "dense_all",
    "dense_witness",
    "is_2wide",
    "is_2wide_integer",
    "is_wide",
    "is_wide_integer",
    "k_star",
    "k_star_weighted",
    "solve_K1",
    "solve_big_K",
    "solve_davenport",
    "solve_little_k",
    "solve_narkiewicz",
]
