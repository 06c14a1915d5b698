#!/usr/bin/env python3
"""
Structured Logger
Machine-readable, correlatable logs on stderr
"""

import json
import logging
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any

from zslab.observability.context import get_run_id

_configured = False


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time"""

    def emit(self, record):
        self.stream = sys.stderr
        super().emit(record)


def configure_logging(level: str = "WARNING") -> None:
    """Install the stderr handler on the package logger (once)"""
    global _configured
    root = logging.getLogger("zslab")
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))
    if _configured:
        return

    handler = _StderrHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


class StructuredLogger:
    """
    Structured logger that emits JSON logs with run context.

    Design:
    - Every log is a JSON object
    - Includes run_id automatically
    - Event-oriented naming
    - Low-cardinality fields
    """

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)
        self.name = name

    def _log(self, level: str, event: str, **fields):
        """Internal log method with structured format"""
        log_level = getattr(logging, level)
        if not self.logger.isEnabledFor(log_level):
            return

        payload = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": level,
            "event": event,
            "source": self.name,
            **{k: _jsonable(v) for k, v in fields.items()},
        }

        run_id = get_run_id()
        if run_id:
            payload["run_id"] = run_id

        self.logger.log(log_level, json.dumps(payload, default=str))

    def debug(self, event: str, **fields):
        self._log("DEBUG", event, **fields)

    def info(self, event: str, **fields):
        self._log("INFO", event, **fields)

    def warning(self, event: str, **fields):
        self._log("WARNING", event, **fields)

    def error(self, event: str, **fields):
        self._log("ERROR", event, **fields)


def get_logger(name: str) -> StructuredLogger:
    """Get structured logger instance"""
    return StructuredLogger(name)
