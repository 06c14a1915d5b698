#!/usr/bin/env python3
"""
Invariant Solvers
Exact k(G), K(G), K₁(G), D(G), N₁(G) and dense witnesses with certificates.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from zslab.config import DEFAULT_CAPS, Caps
from zslab.exceptions import CapExceededError, PreconditionError, SolverError
from zslab.factorization.factor import divides_ufis, is_irreducible, is_ufis
from zslab.groups.group import GroupSpec
from zslab.groups.validators import validate_group_cap
from zslab.invariants.engine import BranchAndBound, Objective
from zslab.invariants.objectives import IrreducibleObjective, UfisObjective, ZeroSumFreeObjective
from zslab.observability.logger import get_logger
from zslab.observability.metrics import get_metrics
from zslab.observability.trace import Trace
from zslab.sequences.sequence import Sequence, to_literal
from zslab.sequences.weights import CROSS, LENGTH, WeightFunction
from zslab.sumsets.sumset import is_zero_sum, is_zero_sum_free

logger = get_logger(__name__)


class ObjectiveKind(str, Enum):
    """What a SolveResult maximises"""
    K_LITTLE = "k"
    K_BIG = "K"
    K1 = "K1"
    D = "D"
    N1 = "N1"
    DENSE_ZSF = "dense_zsf"
    DENSE_UFIS = "dense_ufis"


class DenseKind(str, Enum):
    ZSF = "zsf"
    UFIS = "ufis"


@dataclass
class SolveResult:
    """Optimum value, a witness achieving it, and search statistics"""
    objective: ObjectiveKind
    group: GroupSpec
    weight: WeightFunction
    value: Fraction
    witness: Sequence
    nodes_explored: int
    elapsed_ms: float
    optima: List[Sequence] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "objective": self.objective.value,
            "group": list(self.group.components),
            "weight": self.weight.to_dict(),
            "value": {"num": self.value.numerator, "den": self.value.denominator},
            "witness": to_literal(self.witness),
            "witness_length": len(self.witness),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _check_cap(group: GroupSpec, caps: Caps, objective: ObjectiveKind) -> None:
    try:
        validate_group_cap(group, caps.group_cap)
    except CapExceededError as e:
        logger.warning(
            "cap_exceeded",
            objective=objective.value,
            cap=e.cap_name,
            limit=e.limit,
            actual=e.actual,
        )
        raise


def _revalidate(
    objective: ObjectiveKind,
    witness: Sequence,
    predicate: Callable[[Sequence], bool],
) -> None:
    if not predicate(witness):
        raise SolverError(f"{objective.value} witness {witness} failed re-validation")
    logger.debug("witness_revalidated", objective=objective.value, length=len(witness))


def _ufis_predicate(caps: Caps) -> Callable[[Sequence], bool]:
    def check(S: Sequence) -> bool:
        if len(S) > caps.oracle_len_cap:
            # a zero-sum sequence divides a UFIS iff it is one; no length cap
            logger.debug("witness_revalidated_by_gcd_criterion", length=len(S), cap=caps.oracle_len_cap)
            return is_zero_sum(S) and divides_ufis(S, caps)
        return is_ufis(S, caps)
    return check


def _run(
    kind: ObjectiveKind,
    objective: Objective,
    caps: Caps,
    threads: int,
    predicate: Callable[[Sequence], bool],
) -> SolveResult:
    group = objective.group
    _check_cap(group, caps, kind)

    logger.info("solver_started", objective=kind.value, group=str(group), threads=threads)
    start = time.perf_counter()

    outcome = BranchAndBound(objective, threads).maximize()
    if outcome.value is None:
        # no candidate at all: only the trivial group has no irreducible
        value, witness = Fraction(0), Sequence.empty(group)
    else:
        value, witness = outcome.value, outcome.witness
        _revalidate(kind, witness, predicate)

    elapsed_ms = (time.perf_counter() - start) * 1000
    _record(kind, group, value, outcome.nodes, elapsed_ms)
    return SolveResult(kind, group, objective.weight, value, witness, outcome.nodes, elapsed_ms)


def _record(kind: ObjectiveKind, group: GroupSpec, value: Fraction, nodes: int, elapsed_ms: float) -> None:
    get_metrics().record_solve(kind.value, nodes, elapsed_ms)
    logger.info(
        "solver_finished",
        objective=kind.value,
        group=str(group),
        value=value,
        nodes=nodes,
        elapsed_ms=round(elapsed_ms, 2),
    )


# ==================== INVARIANTS ====================

def solve_little_k(
    group: GroupSpec,
    weight: WeightFunction = CROSS,
    caps: Caps = DEFAULT_CAPS,
    threads: int = 1,
) -> SolveResult:
    """k(G, w): max w(S) over zero-sum free S"""
    return _run(
        ObjectiveKind.K_LITTLE,
        ZeroSumFreeObjective(group, weight),
        caps,
        threads,
        lambda S: is_zero_sum_free(S, caps.group_cap),
    )


def solve_big_K(group: GroupSpec, caps: Caps = DEFAULT_CAPS, threads: int = 1) -> SolveResult:
    """K(G): max k(U) over irreducible U"""
    return _run(
        ObjectiveKind.K_BIG,
        IrreducibleObjective(group, CROSS),
        caps,
        threads,
        lambda S: is_irreducible(S, caps),
    )


def solve_K1(
    group: GroupSpec,
    weight: WeightFunction = CROSS,
    caps: Caps = DEFAULT_CAPS,
    threads: int = 1,
) -> SolveResult:
    """K₁(G, w): max w(S) over UFIS S"""
    return _run(ObjectiveKind.K1, UfisObjective(group, weight), caps, threads, _ufis_predicate(caps))


def solve_davenport(group: GroupSpec, caps: Caps = DEFAULT_CAPS, threads: int = 1) -> SolveResult:
    """D(G): max |U| over irreducible U"""
    return _run(
        ObjectiveKind.D,
        IrreducibleObjective(group, LENGTH),
        caps,
        threads,
        lambda S: is_irreducible(S, caps),
    )


def solve_narkiewicz(group: GroupSpec, caps: Caps = DEFAULT_CAPS, threads: int = 1) -> SolveResult:
    """N₁(G): max |S| over UFIS S"""
    return _run(ObjectiveKind.N1, UfisObjective(group, LENGTH), caps, threads, _ufis_predicate(caps))


# ==================== DENSE WITNESSES ====================

def _dense_objective(group: GroupSpec, kind: DenseKind) -> Objective:
    if kind == DenseKind.ZSF:
        return ZeroSumFreeObjective(group, CROSS)
    if kind == DenseKind.UFIS:
        return UfisObjective(group, CROSS, closed_only=True)
    raise PreconditionError(f"Unknown dense kind {kind!r}")


def _dense_search(group: GroupSpec, kind: DenseKind, caps: Caps, threads: int) -> SolveResult:
    """
    Maximal cross number first, then every sequence attaining it; dense ones
    are those of minimal length, listed in canonical order.
    """
    kind = DenseKind(kind)
    objective_kind = ObjectiveKind.DENSE_ZSF if kind == DenseKind.ZSF else ObjectiveKind.DENSE_UFIS
    _check_cap(group, caps, objective_kind)

    logger.info("solver_started", objective=objective_kind.value, group=str(group), threads=threads)
    trace = Trace()
    start = time.perf_counter()

    engine = BranchAndBound(_dense_objective(group, kind), threads)
    best = engine.maximize()
    trace.mark("optimum_solved")
    collected = engine.collect(best.value)
    trace.mark("optima_collected")

    shortest = min(len(S) for S in collected.optima)
    dense = sorted(
        (S for S in collected.optima if len(S) == shortest),
        key=lambda S: S.canonical_key(),
    )
    predicate = (
        (lambda S: is_zero_sum_free(S, caps.group_cap))
        if kind == DenseKind.ZSF
        else _ufis_predicate(caps)
    )
    for S in dense:
        _revalidate(objective_kind, S, predicate)
    trace.mark("optima_revalidated")
    logger.debug("dense_timeline", group=str(group), timeline=trace.get_timeline())

    nodes = best.nodes + collected.nodes
    elapsed_ms = (time.perf_counter() - start) * 1000
    _record(objective_kind, group, best.value, nodes, elapsed_ms)
    return SolveResult(objective_kind, group, CROSS, best.value, dense[0], nodes, elapsed_ms, dense)


def dense_witness(
    group: GroupSpec,
    kind: DenseKind = DenseKind.ZSF,
    caps: Caps = DEFAULT_CAPS,
    threads: int = 1,
) -> SolveResult:
    """
    Lexicographic optimum: maximal cross number, then minimal length, then
    the smallest canonical multiset.
    """
    return _dense_search(group, kind, caps, threads)


def dense_all(
    group: GroupSpec,
    kind: DenseKind = DenseKind.ZSF,
    caps: Caps = DEFAULT_CAPS,
    threads: int = 1,
) -> List[Sequence]:
    """Every dense sequence of the kind, in canonical order"""
    return _dense_search(group, kind, caps, threads).optima
