#!/usr/bin/env python3
"""
Payload rendering: JSON (exact {num, den} pairs) or one flattened row per
result for CSV and plain-text tables.
"""

import json
from typing import Any, Dict, List

import pandas as pd

from zslab.constants import OUTPUT_FORMATS


def _is_rational(value: Any) -> bool:
    return isinstance(value, dict) and set(value) == {"num", "den"}


def _cell(value: Any) -> Any:
    if _is_rational(value):
        return f"{value['num']}/{value['den']}"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return value


def _rows(result: Any) -> List[Dict[str, Any]]:
    if isinstance(result, dict) and "checks" in result:
        result = result["checks"]
    if not isinstance(result, list):
        result = [result]
    return [{key: _cell(value) for key, value in row.items()} for row in result]


def to_frame(payload: Dict[str, Any]) -> pd.DataFrame:
    """One row per result, rationals as n/d strings, nested values as compact JSON"""
    return pd.DataFrame(_rows(payload["result"]))


def render(payload: Dict[str, Any], fmt: str) -> str:
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"Unknown output format {fmt!r}")
    if fmt == "json":
        return json.dumps(payload, indent=2)
    df = to_frame(payload)
    if fmt == "csv":
        return df.to_csv(index=False).rstrip("\n")
    return df.to_string(index=False, na_rep="---")
