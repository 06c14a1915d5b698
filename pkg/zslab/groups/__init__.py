#!/usr/bin/env python3
"""
Groups Module
Finite abelian groups in canonical form and their element arithmetic
"""

from zslab.groups.group import (
    GroupElement,
    GroupSpec,
    abelian_groups,
    add,
    check_quotient_hypothesis,
    cyclic,
    direct_sum,
    elementary,
    elements,
    exponent,
    format_group,
    invariant_factors,
    neg,
    nonzero_elements,
    order,
    parse_group,
    quotient_to_cp,
    smul,
    subgroup_h,
)
from zslab.groups.primes import is_prime, p_minus, p_plus

__all__ = [
    "GroupElement",
    "GroupSpec",
    "abelian_groups",
    "add",
    "check_quotient_hypothesis",
    "cyclic",
    "direct_sum",
    "elementary",
    "elements",
    "exponent",
    "format_group",
    "invariant_factors",
    "is_prime",
    "neg",
    "nonzero_elements",
    "order",
    "p_minus",
    "p_plus",
    "parse_group",
    "quotient_to_cp",
    "smul",
    "subgroup_h",
]
