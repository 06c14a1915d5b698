#!/usr/bin/env python3
"""
Solver Service
Memoizing orchestration layer over the invariant solvers.

Verification checks ask for the same small invariants again and again
(k(C₃), K₁(C₂), ...); results are cached per (objective, group, weight,
caps).
"""

import threading
from typing import Callable, Dict, List, Optional, Tuple

from zslab.config import Caps, Config
from zslab.groups.group import GroupSpec
from zslab.invariants.solvers import (
    DenseKind,
    SolveResult,
    dense_witness,
    solve_big_K,
    solve_davenport,
    solve_K1,
    solve_little_k,
    solve_narkiewicz,
)
from zslab.observability.logger import get_logger
from zslab.sequences.sequence import Sequence
from zslab.sequences.weights import CROSS, WeightFunction

logger = get_logger(__name__)

INVARIANTS = ("k", "K", "K1", "D", "N1")
WEIGHTED_INVARIANTS = ("k", "K1")


class SolverService:
    """
    Service layer for invariant computations.

    - One cache for every solver
    - Caps and thread count come from the active Config
    """

    def __init__(self, config: Optional[Config] = None):
        self._lock = threading.Lock()
        self._cache: Dict[Tuple, SolveResult] = {}
        self.configure(config or Config.from_env())

    def configure(self, config: Config) -> None:
        self.config = config
        self.caps: Caps = config.caps
        self.threads: int = config.threads
        logger.debug("solver_service_configured", group_cap=self.caps.group_cap, threads=self.threads)

    def _cached(self, key: Tuple, compute: Callable[[], SolveResult]) -> SolveResult:
        key = key + (self.caps,)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = compute()
        with self._lock:
            self._cache.setdefault(key, result)
        return result

    # ==================== INVARIANTS ====================

    def little_k(self, group: GroupSpec, weight: WeightFunction = CROSS) -> SolveResult:
        return self._cached(
            ("k", group, weight),
            lambda: solve_little_k(group, weight, self.caps, self.threads),
        )

    def big_K(self, group: GroupSpec) -> SolveResult:
        return self._cached(("K", group, CROSS), lambda: solve_big_K(group, self.caps, self.threads))

    def K1(self, group: GroupSpec, weight: WeightFunction = CROSS) -> SolveResult:
        return self._cached(
            ("K1", group, weight),
            lambda: solve_K1(group, weight, self.caps, self.threads),
        )

    def davenport(self, group: GroupSpec) -> SolveResult:
        return self._cached(("D", group), lambda: solve_davenport(group, self.caps, self.threads))

    def narkiewicz(self, group: GroupSpec) -> SolveResult:
        return self._cached(("N1", group), lambda: solve_narkiewicz(group, self.caps, self.threads))

    def solve(self, which: str, group: GroupSpec, weight: WeightFunction = CROSS) -> SolveResult:
        """Dispatch by invariant name; only k and K1 take a weight"""
        if which == "k":
            return self.little_k(group, weight)
        if which == "K":
            return self.big_K(group)
        if which == "K1":
            return self.K1(group, weight)
        if which == "D":
            return self.davenport(group)
        if which == "N1":
            return self.narkiewicz(group)
        raise ValueError(f"Unknown invariant {which!r}; expected one of {', '.join(INVARIANTS)}")

    # ==================== DENSE ====================

    def dense(self, group: GroupSpec, kind: DenseKind = DenseKind.ZSF) -> SolveResult:
        kind = DenseKind(kind)
        return self._cached(
            ("dense", kind.value, group),
            lambda: dense_witness(group, kind, self.caps, self.threads),
        )

    def dense_all(self, group: GroupSpec, kind: DenseKind = DenseKind.ZSF) -> List[Sequence]:
        return self.dense(group, kind).optima

    def reset(self) -> None:
        """Drop cached results (testing only)"""
        with self._lock:
            self._cache.clear()


# Singleton instance
_service_instance: Optional[SolverService] = None


def get_solver_service() -> SolverService:
    """Get singleton solver service instance"""
    global _service_instance
    if _service_instance is None:
        _service_instance = SolverService()
    return _service_instance
