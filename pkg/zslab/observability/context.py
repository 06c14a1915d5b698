#!/usr/bin/env python3
"""
Run Context Management
One run id per CLI invocation, visible to every log line it produces
"""

import contextvars
import uuid
from contextlib import contextmanager
from typing import Iterator, Optional

_run_id = contextvars.ContextVar("run_id", default=None)


def generate_run_id() -> str:
    return f"RUN-{uuid.uuid4().hex[:12]}"


def set_run_id(run_id: str):
    _run_id.set(run_id)


def get_run_id() -> Optional[str]:
    return _run_id.get()


@contextmanager
def run_scope(run_id: Optional[str] = None) -> Iterator[str]:
    """
    Bind a run id (a fresh one by default) for the duration of the block and
    restore the previous binding afterwards.
    """
    token = _run_id.set(run_id or generate_run_id())
    try:
        yield _run_id.get()
    finally:
        _run_id.reset(token)


def clear_context():
    """Forget the current run id (tests)"""
    _run_id.set(None)
