#!/usr/bin/env python3
"""
Runtime configuration.

Precedence: explicit overrides (CLI flags) > environment (.env honoured) > constants.
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from zslab.constants import (
    DEFAULT_GROUP_CAP,
    DEFAULT_ORACLE_LEN_CAP,
    DEFAULT_OUTPUT,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    LOG_LEVEL,
    OUTPUT_FORMATS,
)
from zslab.exceptions import ConfigError

load_dotenv()

ENV_PREFIX = "ZSLAB_"


@dataclass(frozen=True)
class Caps:
    """Size caps handed to every operation with a cap precondition"""
    group_cap: int = DEFAULT_GROUP_CAP
    oracle_len_cap: int = DEFAULT_ORACLE_LEN_CAP


DEFAULT_CAPS = Caps()


def available_threads() -> int:
    """Available parallelism, at least 1"""
    return max(1, os.cpu_count() or 1)


class Config(BaseModel):
    """Validated, immutable run configuration (echoed into every payload)"""

    model_config = ConfigDict(frozen=True)

    group_cap: int = Field(DEFAULT_GROUP_CAP, ge=1)
    oracle_len_cap: int = Field(DEFAULT_ORACLE_LEN_CAP, ge=1)
    threads: int = Field(default_factory=available_threads, ge=1)
    output: str = DEFAULT_OUTPUT
    seed: int = DEFAULT_SEED

    @field_validator("output")
    @classmethod
    def validate_output(cls, v: str) -> str:
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {', '.join(OUTPUT_FORMATS)}")
        return v

    @property
    def caps(self) -> Caps:
        return Caps(group_cap=self.group_cap, oracle_len_cap=self.oracle_len_cap)

    @classmethod
    def from_env(cls, **overrides: Any) -> "Config":
        """
        Build a Config from ZSLAB_* environment variables.

        Overrides whose value is None are ignored so CLI options can be
        forwarded unconditionally.
        """
        values: Dict[str, Any] = {}
        for name, env in (
            ("group_cap", "GROUP_CAP"),
            ("oracle_len_cap", "ORACLE_LEN_CAP"),
            ("threads", "THREADS"),
            ("output", "OUTPUT"),
            ("seed", "SEED"),
        ):
            raw = os.getenv(ENV_PREFIX + env)
            if raw is not None and raw != "":
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        # threads == 0 means "available parallelism"
        if str(values.get("threads", DEFAULT_THREADS)) == "0":
            values.pop("threads", None)

        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration: {e.errors()[0]['msg']}") from e


def get_log_level(override: Optional[str] = None) -> str:
    """Log level: explicit override, then ZSLAB_LOG_LEVEL, then the constant"""
    if override:
        return override.upper()
    return (os.getenv(ENV_PREFIX + "LOG_LEVEL") or LOG_LEVEL).upper()
