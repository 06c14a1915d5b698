#!/usr/bin/env python3
"""
System Constants
Centralized configuration for tunable parameters
"""

# ==================== SEARCH CAPS ====================

# Largest group order the exhaustive solvers accept
DEFAULT_GROUP_CAP = 64

# Longest sequence the labeled factorization counter accepts
DEFAULT_ORACLE_LEN_CAP = 14

# Cap used by checks that explicitly ask for a larger instance
EXTENDED_GROUP_CAP = 128

# ==================== CONJECTURE CHECKS ====================

# Zero-sum free sequences are enumerated exhaustively up to this length
DEFAULT_CONJECTURE_LEN_CAP = 6

# Random zero-sum free sequences drawn beyond the exhaustive cap
DEFAULT_CONJECTURE_SAMPLES = 0

# Seed for every sampled check
DEFAULT_SEED = 0

# ==================== PARALLELISM ====================

# 0 means "use available parallelism"
DEFAULT_THREADS = 0

# ==================== OUTPUT ====================

OUTPUT_FORMATS = ("json", "csv", "table")

DEFAULT_OUTPUT = "json"

# ==================== CLI EXIT CODES ====================

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2

# A verification check reported a counterexample
EXIT_CHECK_FAILED = 3

# ==================== LOGGING ====================

# Logs go to stderr; stdout is reserved for payloads
LOG_LEVEL = "WARNING"
