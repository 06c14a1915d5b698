#!/usr/bin/env python3
"""
Check Reports
Structured pass/fail records with witnesses and exact values.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from zslab.groups.group import GroupSpec
from zslab.sequences.sequence import Sequence, to_literal


class CheckStatus(str, Enum):
    """Outcome of a check"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_CAP = "skipped_cap"
    SKIPPED_HYPOTHESIS = "skipped_hypothesis"
    ERROR = "error"


def rational(value: Optional[Fraction]) -> Optional[Dict[str, int]]:
    if value is None:
        return None
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def jsonable(value: Any) -> Any:
    """Exact, JSON-ready rendering of report contents"""
    if isinstance(value, Fraction):
        return rational(value)
    if isinstance(value, Sequence):
        return to_literal(value)
    if isinstance(value, GroupSpec):
        return list(value.components)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class CheckReport:
    check_id: str
    params: Dict[str, Any]
    status: CheckStatus
    value_lhs: Optional[Fraction] = None
    value_rhs: Optional[Fraction] = None
    witnesses: List[Sequence] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    nodes_explored: int = 0
    elapsed_ms: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == CheckStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": jsonable(self.params),
            "status": self.status.value,
            "value_lhs": rational(self.value_lhs),
            "value_rhs": rational(self.value_rhs),
            "witnesses": [to_literal(w) for w in self.witnesses],
            "details": jsonable(self.details),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
