#!/usr/bin/env python3
"""
Configuration Tests
Precedence of overrides, environment and defaults
"""

import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

import pytest

from zslab.config import Caps, Config, available_threads, get_log_level
from zslab.constants import DEFAULT_GROUP_CAP, DEFAULT_ORACLE_LEN_CAP
from zslab.exceptions import ConfigError

ENV_VARS = ("GROUP_CAP", "ORACLE_LEN_CAP", "THREADS", "OUTPUT", "SEED", "LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv("ZSLAB_" + name, raising=False)


def test_defaults():
    config = Config.from_env()
    assert config.group_cap == DEFAULT_GROUP_CAP
    assert config.oracle_len_cap == DEFAULT_ORACLE_LEN_CAP
    assert config.output == "json"
    assert config.threads == available_threads()
    assert config.caps == Caps()
    print("✓ Defaults come from constants")


def test_environment_and_overrides(monkeypatch):
    monkeypatch.setenv("ZSLAB_GROUP_CAP", "32")
    monkeypatch.setenv("ZSLAB_OUTPUT", "csv")
    monkeypatch.setenv("ZSLAB_SEED", "7")

    config = Config.from_env()
    assert config.group_cap == 32
    assert config.output == "csv"
    assert config.seed == 7

    config = Config.from_env(group_cap=16, output=None)
    assert config.group_cap == 16
    assert config.output == "csv"
    assert config.caps.group_cap == 16
    print("✓ Overrides > environment > constants")


def test_threads_zero_means_available(monkeypatch):
    assert Config.from_env(threads=0).threads == available_threads()
    monkeypatch.setenv("ZSLAB_THREADS", "0")
    assert Config.from_env().threads == available_threads()
    assert Config.from_env(threads=3).threads == 3


def test_invalid_values():
    with pytest.raises(ConfigError):
        Config.from_env(output="xml")
    with pytest.raises(ConfigError):
        Config.from_env(group_cap=0)
    with pytest.raises(ConfigError):
        Config.from_env(threads=-2)


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("ZSLAB_ORACLE_LEN_CAP", "many")
    with pytest.raises(ConfigError):
        Config.from_env()


def test_config_is_frozen():
    config = Config.from_env()
    with pytest.raises(Exception):
        config.group_cap = 1
    copy = config.model_copy(update={"group_cap": 128})
    assert copy.group_cap == 128
    assert config.group_cap == DEFAULT_GROUP_CAP


def test_log_level(monkeypatch):
    assert get_log_level() == "WARNING"
    assert get_log_level("debug") == "DEBUG"
    monkeypatch.setenv("ZSLAB_LOG_LEVEL", "info")
    assert get_log_level() == "INFO"


def main():
    """Run configuration tests"""
    print("=" * 60)
    print("CONFIGURATION TESTING")
    print("=" * 60)
    try:
        sys.exit(pytest.main([__file__, "-q"]))
    except AssertionError as e:
        print(f"\n❌ TEST FAILED: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
