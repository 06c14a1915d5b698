#!/usr/bin/env python3
"""
Sequences Module
Sequence algebra over G• and weight functions
"""

from zslab.sequences.sequence import (
    Sequence,
    amalgamate,
    cross_number,
    cross_terms,
    div,
    divides,
    from_literal,
    gcd_seq,
    length,
    mul,
    order_histogram,
    restrict,
    sigma,
    to_literal,
)
from zslab.sequences.weights import CROSS, DYADIC, LENGTH, WeightFunction, parse_weight

__all__ = [
    "CROSS",
    "DYADIC",
    "LENGTH",
    "Sequence",
    "WeightFunction",
    "amalgamate",
    "cross_number",
    "cross_terms",
    "div",
    "divides",
    "from_literal",
    "gcd_seq",
    "length",
    "mul",
    "order_histogram",
    "parse_weight",
    "restrict",
    "sigma",
    "to_literal",
]
