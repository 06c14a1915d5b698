#!/usr/bin/env python3
"""
Sumsets Module
Subset sums, zero-sum freeness and full sumsets
"""

from zslab.sumsets.sumset import (
    SumsetState,
    has_full_sumset,
    is_zero_sum,
    is_zero_sum_free,
    iter_zero_sum_free,
    random_zero_sum_free,
    subset_sum_counts,
    sumset,
    sumset_mask,
)

__all__ = [
    "SumsetState",
    "has_full_sumset",
    "is_zero_sum",
    "is_zero_sum_free",
    "iter_zero_sum_free",
    "random_zero_sum_free",
    "subset_sum_counts",
    "sumset",
    "sumset_mask",
]
