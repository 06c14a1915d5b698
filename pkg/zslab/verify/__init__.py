#!/usr/bin/env python3
"""
Verification Module
Executable checks of the structural results and the suite that runs them
"""

from zslab.verify.checks import (
    CHECKS,
    check_additivity_K1,
    check_additivity_k,
    check_amalgamation_lemma,
    check_conjecture5,
    check_conjecture6,
    check_conjectures_12,
    check_eq6_and_oddcount,
    check_full_sumset,
    check_gao_n1,
    check_k_bounds,
    check_lemma3_oracle,
    check_lemma4,
    check_toplift,
    check_twoprime,
    check_weighted_additivity,
    check_wide_cyclic,
)
from zslab.verify.report import CheckReport, CheckStatus
from zslab.verify.suite import SuiteReport, run_suite

__all__ = [
    "CHECKS",
    "CheckReport",
    "CheckStatus",
    "SuiteReport",
    "check_additivity_K1",
    "check_additivity_k",
    "check_amalgamation_lemma",
    "check_conjecture5",
    "check_conjecture6",
    "check_conjectures_12",
    "check_eq6_and_oddcount",
    "check_full_sumset",
    "check_gao_n1",
    "check_k_bounds",
    "check_lemma3_oracle",
    "check_lemma4",
    "check_toplift",
    "check_twoprime",
    "check_weighted_additivity",
    "check_wide_cyclic",
]
