#!/usr/bin/env python3
"""
Services Module
"""

from zslab.services.solver_service import SolverService, get_solver_service

__all__ = ["SolverService", "get_solver_service"]
