#!/usr/bin/env python3
"""
Exception hierarchy shared by every zslab module.
"""

from typing import Optional


class ZeroSumError(ValueError):
    """Base class for all zslab errors"""


class ConfigError(ZeroSumError):
    """Invalid configuration value"""


class GroupParseError(ZeroSumError):
    """Group text does not follow `orders := int ("," int)*`"""


class GroupMismatchError(ZeroSumError):
    """Operands belong to different groups"""


class SequenceError(ZeroSumError):
    """Invalid sequence construction or operation"""


class WeightError(ZeroSumError):
    """Weight function cannot evaluate an order"""


class PreconditionError(ZeroSumError):
    """An operation precondition does not hold"""


class SolverError(ZeroSumError):
    """A solver witness failed independent re-validation"""


class CapExceededError(ZeroSumError):
    """A size cap that keeps exhaustive search tractable was exceeded"""

    def __init__(self, cap_name: str, limit: int, actual: int, message: Optional[str] = None):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        super().__init__(message or f"{cap_name} exceeded: {actual} > {limit}")
