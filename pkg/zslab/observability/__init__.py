#!/usr/bin/env python3
"""
Observability Module
Structured logging, metrics, run context
"""

from zslab.observability.logger import configure_logging, get_logger
from zslab.observability.metrics import get_metrics
from zslab.observability.context import (
    clear_context,
    generate_run_id,
    get_run_id,
    run_scope,
    set_run_id,
)

__all__ = [
    "configure_logging",
    "get_logger",
    "get_metrics",
    "clear_context",
    "generate_run_id",
    "get_run_id",
    "run_scope",
    "set_run_id",
]
