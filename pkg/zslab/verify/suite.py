#!/usr/bin/env python3
"""
Verification Suite
Fixed battery of checks over small groups. The fast battery stays within
the default caps; the slow battery adds the heavier instances.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from zslab.config import Config
from zslab.groups.group import GroupSpec, cyclic, elementary
from zslab.observability.logger import get_logger
from zslab.services.solver_service import get_solver_service
from zslab.verify.checks import (
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

logger = get_logger(__name__)

Case = Tuple[Callable[..., CheckReport], Tuple[Any, ...]]

SMALL_GROUPS = [
    cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
    elementary(2, 2), cyclic(7), cyclic(8), cyclic(9), cyclic(10),
]


def fast_battery() -> List[Case]:
    cases: List[Case] = []
    cases += [(check_k_bounds, (g,)) for g in SMALL_GROUPS]
    cases += [
        (check_amalgamation_lemma, (cyclic(4), 4)),
        (check_amalgamation_lemma, (cyclic(8), 8)),
        (check_amalgamation_lemma, (cyclic(6), 2)),
        (check_lemma4, (cyclic(4),)),
        (check_lemma4, (cyclic(6),)),
        (check_lemma4, (cyclic(8),)),
        (check_additivity_k, (2, 1, cyclic(3))),
        (check_additivity_k, (2, 2, cyclic(3))),
        (check_additivity_K1, (2, 1, cyclic(3))),
        (check_toplift, (2, [1])),
        (check_toplift, (2, [1, 1])),
        (check_toplift, (3, [1])),
        (check_eq6_and_oddcount, (2, 1)),
        (check_eq6_and_oddcount, (2, 2)),
        (check_eq6_and_oddcount, (3, 2)),
    ]
    for p, k in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2)]:
        cases += [(check_conjecture5, (p, k)), (check_conjecture6, (p, k))]
    cases += [(check_gao_n1, pn) for pn in [(2, 1), (2, 2), (2, 3), (3, 2)]]
    cases += [
        (check_weighted_additivity, (2, 1, cyclic(3))),
        (check_twoprime, (2, 1, 3, 1)),
    ]
    cases += [(check_conjectures_12, (g,)) for g in SMALL_GROUPS]
    cases += [
        (check_wide_cyclic, (6,)),
        (check_wide_cyclic, (10,)),
        (check_full_sumset, (2, 1, cyclic(3))),
        (check_lemma3_oracle, (6, 4)),
    ]
    return cases


def slow_battery() -> List[Case]:
    return [
        (check_additivity_K1, (2, 2, cyclic(3))),
        (check_amalgamation_lemma, (cyclic(12), 4)),
        (check_lemma4, (cyclic(12),)),
        (check_conjectures_12, (GroupSpec.from_orders([2, 6]),)),
        (check_lemma3_oracle, (9, 6)),
    ]


@dataclass
class SuiteReport:
    reports: List[CheckReport] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def tally(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.reports)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "summary": self.tally(),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "checks": [r.to_dict() for r in self.reports],
        }


def run_suite(config: Optional[Config] = None, slow: bool = False) -> SuiteReport:
    """Run the fast battery (and the slow one on request) in a fixed order"""
    service = get_solver_service()
    if config is not None:
        service.configure(config)

    cases = fast_battery() + (slow_battery() if slow else [])
    logger.info("suite_started", checks=len(cases), slow=slow)

    start = time.perf_counter()
    suite = SuiteReport()
    for check, args in cases:
        suite.reports.append(check(*args))
    suite.elapsed_ms = (time.perf_counter() - start) * 1000

    logger.info("suite_finished", elapsed_ms=round(suite.elapsed_ms, 2), **suite.tally())
    return suite
