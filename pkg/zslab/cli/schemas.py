#!/usr/bin/env python3
"""
Pydantic schemas for CLI payloads
Every payload re-parses into the data types it was produced from.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from zslab.groups.group import GroupSpec
from zslab.sequences.sequence import Sequence, from_literal
from zslab.verify.report import CheckStatus


class RationalPayload(BaseModel):
    """Exact rational as an integer pair"""
    num: int
    den: int = Field(..., ge=1)

    @classmethod
    def of(cls, value: Fraction) -> "RationalPayload":
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


class ConfigPayload(BaseModel):
    """Echo of the run configuration"""
    group_cap: int = Field(..., ge=1)
    oracle_len_cap: int = Field(..., ge=1)
    threads: int = Field(..., ge=1)
    output: str
    seed: int


class SolveResultPayload(BaseModel):
    """Schema for a solver result"""
    objective: str
    group: List[int]
    weight: Dict[str, Any]
    value: RationalPayload
    witness: List[List[Any]]
    witness_length: int = Field(..., ge=0)
    nodes_explored: int = Field(..., ge=0)
    elapsed_ms: float
    davenport_lower: Optional[int] = None

    def to_group(self) -> GroupSpec:
        return GroupSpec(tuple(self.group))

    def to_witness(self) -> Sequence:
        return from_literal(self.to_group(), self.witness)


class FormulaPayload(BaseModel):
    """Schema for a closed-form value"""
    formula: str
    group: List[int]
    weight: Dict[str, Any] = Field(default_factory=lambda: {"kind": "cross"})
    value: RationalPayload

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"formula": "K1star", "group": [4, 3], "value": {"num": 5, "den": 2}}
        }
    )


class WidenessPayload(BaseModel):
    """Schema for a wideness predicate"""
    p: Optional[int] = None
    n: int = Field(..., ge=1)
    variant: str
    lhs: Optional[RationalPayload] = None
    rhs: Optional[RationalPayload] = None
    holds: bool


class DensePayload(BaseModel):
    """Schema for a dense witness"""
    kind: str
    group: List[int]
    value: RationalPayload
    witness: List[List[Any]]
    order_histogram: Dict[str, int]
    dense_count: int = Field(..., ge=1)
    optima: Optional[List[List[List[Any]]]] = None

    def to_witness(self) -> Sequence:
        return from_literal(GroupSpec(tuple(self.group)), self.witness)


class CheckReportPayload(BaseModel):
    """Schema for a verification report"""
    check_id: str
    params: Dict[str, Any]
    status: CheckStatus
    value_lhs: Optional[RationalPayload] = None
    value_rhs: Optional[RationalPayload] = None
    witnesses: List[List[List[Any]]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    nodes_explored: int = Field(0, ge=0)
    elapsed_ms: float = 0.0


class SuitePayload(BaseModel):
    """Schema for a suite run"""
    summary: Dict[str, int]
    elapsed_ms: float
    checks: List[CheckReportPayload]

    @field_validator("summary")
    @classmethod
    def validate_summary(cls, v: Dict[str, int]) -> Dict[str, int]:
        unknown = set(v) - {s.value for s in CheckStatus}
        if unknown:
            raise ValueError(f"Unknown statuses in summary: {sorted(unknown)}")
        return v


class CommandPayload(BaseModel):
    """Envelope printed on stdout by every command"""
    command: str
    run_id: Optional[str] = None
    config: ConfigPayload
    result: Any
