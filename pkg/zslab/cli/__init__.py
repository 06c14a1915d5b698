#!/usr/bin/env python3
"""
CLI Module
click commands, payload schemas and rendering
"""

from zslab.cli.main import cli, main

__all__ = ["cli", "main"]
